#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "npwsd/errors.hpp"
#include "npwsd/fixture.hpp"
#include "npwsd/pipeline.hpp"
#include "npwsd/util.hpp"

using namespace npwsd;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  explicit TempDir(const std::string& name) : path(fs::current_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path path;
};

bool same_bytes(const fs::path& a, const fs::path& b) {
  return read_file(a.string()) == read_file(b.string());
}

}  // namespace

TEST_CASE("fixture generation is deterministic per seed") {
  TempDir d1("tmp_fix_a"), d2("tmp_fix_b"), d3("tmp_fix_c");
  generate_fixture(d1.path.string(), FixtureParams{});
  generate_fixture(d2.path.string(), FixtureParams{});
  FixtureParams other;
  other.seed = 43;
  generate_fixture(d3.path.string(), other);

  int files = 0;
  for (const auto& entry : fs::directory_iterator(d1.path)) {
    ++files;
    const fs::path name = entry.path().filename();
    CHECK(same_bytes(entry.path(), d2.path / name));
    CHECK(fs::exists(d3.path / name));  // same schema for every seed
  }
  CHECK(files == 12);
  CHECK(!same_bytes(d1.path / "src_corpus.txt", d3.path / "src_corpus.txt"));
}

TEST_CASE("pipeline config loading resolves paths and rejects junk") {
  TempDir d("tmp_cfg");
  const std::string cfg = (d.path / "p.config").string();
  write_file(cfg,
             "# comment\n"
             "src-corpus = sub/one.txt\n"
             "threshold = 3\n"
             "out-dir = out\n");
  const PipelineConfig config = load_pipeline_config(cfg);
  CHECK(config.src_corpus == (d.path / "sub/one.txt").lexically_normal().string());
  CHECK(config.threshold == 3);
  CHECK(config.out_dir == (d.path / "out").string());

  write_file(cfg, "bogus-key = 1\n");
  CHECK_THROWS_AS(load_pipeline_config(cfg), DataError);
  CHECK_THROWS_AS(load_pipeline_config((d.path / "absent.config").string()), DataError);
}

TEST_CASE("validation failures carry their stage tag") {
  TempDir d("tmp_val");
  generate_fixture(d.path.string(), FixtureParams{});
  PipelineConfig config = load_pipeline_config((d.path / "pipeline.config").string());
  config.dictionary = (d.path / "no_such_file.tsv").string();
  try {
    run_pipeline(config);
    CHECK(false);
  } catch (const StageError& e) {
    CHECK(e.stage() == "align");
    CHECK(std::string(e.what()).find("align: dictionary not found") !=
          std::string::npos);
  }
  // nothing was written: validation happens before any stage runs
  CHECK(!fs::exists(config.out_dir + std::string("/") + kSrcPhrasesFile));
}

TEST_CASE("pipeline artifacts are byte-identical across reruns") {
  TempDir d("tmp_pipe");
  generate_fixture(d.path.string(), FixtureParams{});
  PipelineConfig config = load_pipeline_config((d.path / "pipeline.config").string());

  config.out_dir = (d.path / "run1").string();
  const EvalReport r1 = run_pipeline(config);
  config.out_dir = (d.path / "run2").string();
  const EvalReport r2 = run_pipeline(config);

  CHECK(r1.amenable_words == r2.amenable_words);
  CHECK(r1.retained_words == r2.retained_words);
  for (const char* name : {kSrcPhrasesFile, kTgtPhrasesFile, kAlignmentsFile,
                           kAnnotatedFile, kReportFile, kSweepFile})
    CHECK(same_bytes(fs::path(d.path / "run1" / name), fs::path(d.path / "run2" / name)));
}

TEST_CASE("rerunning evaluate on the artifacts matches the pipeline report") {
  TempDir d("tmp_stage");
  generate_fixture(d.path.string(), FixtureParams{});
  PipelineConfig config = load_pipeline_config((d.path / "pipeline.config").string());
  config.out_dir = (d.path / "out").string();
  const EvalReport direct = run_pipeline(config);

  const ParsedCorpus annotated =
      load_corpus((fs::path(config.out_dir) / kAnnotatedFile).string());
  const EvalReport replay = evaluate(annotated, config.threshold);
  CHECK(replay.amenable_words == direct.amenable_words);
  CHECK(replay.phrase_words == direct.phrase_words);
  CHECK(replay.covered_words == direct.covered_words);
  CHECK(replay.retained_words == direct.retained_words);
}

TEST_CASE("a threshold above every frequency reports zero coverage") {
  TempDir d("tmp_thresh");
  generate_fixture(d.path.string(), FixtureParams{});
  PipelineConfig config = load_pipeline_config((d.path / "pipeline.config").string());
  config.out_dir = (d.path / "out").string();
  config.threshold = 51;  // the largest fixture frequency is 50
  const EvalReport report = run_pipeline(config);
  CHECK(report.covered_words == 0);
  CHECK(!report.potential_precision().has_value());
  CHECK(report.phrase_words > 0);
}

TEST_CASE("the fixture report matches the hand-derived counts") {
  TempDir d("tmp_hand");
  generate_fixture(d.path.string(), FixtureParams{});
  PipelineConfig config = load_pipeline_config((d.path / "pipeline.config").string());
  config.out_dir = (d.path / "out").string();
  const EvalReport report = run_pipeline(config);  // threshold 2 per config

  CHECK(report.amenable_words == 26);
  CHECK(report.phrase_words == 21);
  CHECK(report.covered_words == 20);
  CHECK(report.retained_words == 16);
  CHECK(format_percent(report.phrase_rate()) == "80.77%");
  CHECK(format_percent(report.coverage()) == "76.92%");
  CHECK(format_percent(*report.potential_precision()) == "80.00%");

  const std::string alignments =
      read_file((fs::path(config.out_dir) / kAlignmentsFile).string());
  CHECK(alignments ==
        "art study\testudio de arte\t3\n"
        "free trade agreement\ttratado de libre comercio\t2\n"
        "friend of mine\tconocido de la mina\t1\n"
        "head of the family\tresponsable de la cámara\t8\n"
        "number of voter\tnúmero de votante\t5\n"
        "year old\taño de edad\t50\n");

  const std::string sweep =
      read_file((fs::path(config.out_dir) / kSweepFile).string());
  CHECK(sweep ==
        "threshold\tcoverage\tcovered_words\tpotential_precision\tretained_words\n"
        "0\t80.77%\t21\t76.19%\t16\n"
        "1\t80.77%\t21\t76.19%\t16\n"
        "2\t76.92%\t20\t80.00%\t16\n"
        "3\t69.23%\t18\t77.78%\t14\n"
        "5\t53.85%\t14\t78.57%\t11\n"
        "8\t38.46%\t10\t70.00%\t7\n"
        "50\t15.38%\t4\t100.00%\t4\n");
}
