#include "npwsd/pipeline.hpp"

#include <filesystem>
#include <sstream>

#include "npwsd/aligner.hpp"
#include "npwsd/annotator.hpp"
#include "npwsd/chunker.hpp"
#include "npwsd/errors.hpp"
#include "npwsd/matcher.hpp"
#include "npwsd/sense_filter.hpp"
#include "npwsd/util.hpp"

namespace npwsd {

namespace {

namespace fs = std::filesystem;

std::string resolve(const fs::path& base, const std::string& value) {
  if (value.empty()) return value;
  const fs::path p(value);
  return p.is_absolute() ? p.string() : (base / p).lexically_normal().string();
}

void check_file(const std::string& stage, const std::string& what,
                const std::string& path) {
  if (path.empty()) throw StageError(stage, what + " not configured");
  if (!fs::exists(path)) throw StageError(stage, what + " not found: " + path);
}

std::string doc_id_for(const std::string& path) {
  return fs::path(path).stem().string();
}

}  // namespace

PipelineConfig load_pipeline_config(const std::string& path) {
  if (!fs::exists(path)) throw DataError("config not found: " + path);
  const fs::path base = fs::path(path).parent_path();
  PipelineConfig config;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw DataError(path, lineno, "expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "src-corpus") config.src_corpus = resolve(base, value);
    else if (key == "tgt-corpus") config.tgt_corpus = resolve(base, value);
    else if (key == "eval-corpus") config.eval_corpus = resolve(base, value);
    else if (key == "src-lexicon") config.src_lexicon = resolve(base, value);
    else if (key == "tgt-lexicon") config.tgt_lexicon = resolve(base, value);
    else if (key == "dictionary") config.dictionary = resolve(base, value);
    else if (key == "src-inventory") config.src_inventory = resolve(base, value);
    else if (key == "tgt-inventory") config.tgt_inventory = resolve(base, value);
    else if (key == "map") {
      for (const std::string& m : split(value, ','))
        if (!trim(m).empty()) config.maps.push_back(resolve(base, trim(m)));
    } else if (key == "threshold") config.threshold = parse_long(value, "threshold");
    else if (key == "out-dir") config.out_dir = resolve(base, value);
    else if (key == "seed") config.seed = parse_long(value, "seed");
    else throw DataError(path, lineno, "unknown config key \"" + key + "\"");
  }
  return config;
}

void validate_config(const PipelineConfig& config) {
  check_file("chunk", "source corpus", config.src_corpus);
  check_file("chunk", "source lexicon", config.src_lexicon);
  check_file("chunk", "target corpus", config.tgt_corpus);
  check_file("chunk", "target lexicon", config.tgt_lexicon);
  check_file("align", "dictionary", config.dictionary);
  check_file("annotate", "evaluation corpus", config.eval_corpus);
  check_file("annotate", "source inventory", config.src_inventory);
  check_file("annotate", "target inventory", config.tgt_inventory);
  if (config.maps.empty())
    throw StageError("annotate", "no mapping files configured");
  for (const std::string& m : config.maps) check_file("annotate", "mapping", m);
  if (config.threshold < 0)
    throw StageError("evaluate", "threshold must be non-negative");
  if (config.out_dir.empty()) throw StageError("chunk", "out-dir not configured");
}

EvalReport run_pipeline(const PipelineConfig& config) {
  validate_config(config);

  // parse everything up front so a bad file aborts before any output
  Lexicon src_lexicon, tgt_lexicon;
  BilingualDictionary dict;
  SenseInventory src_inv, tgt_inv;
  MappingChain chain;
  std::string src_text, tgt_text;
  ParsedCorpus corpus;
  try {
    src_lexicon = load_lexicon(config.src_lexicon);
    tgt_lexicon = load_lexicon(config.tgt_lexicon);
    src_text = read_file(config.src_corpus);
    tgt_text = read_file(config.tgt_corpus);
  } catch (const DataError& e) {
    throw StageError("chunk", e.what());
  }
  try {
    dict = load_dictionary(config.dictionary);
  } catch (const DataError& e) {
    throw StageError("align", e.what());
  }
  try {
    src_inv = load_inventory(config.src_inventory, "source");
    tgt_inv = load_inventory(config.tgt_inventory, "target");
    for (const std::string& m : config.maps) chain.push_back(load_mapping(m));
    corpus = load_corpus(config.eval_corpus);
  } catch (const DataError& e) {
    throw StageError("annotate", e.what());
  }

  fs::create_directories(config.out_dir);
  const fs::path out(config.out_dir);

  PhraseCounts src_counts, tgt_counts;
  try {
    const Document src_doc =
        analyze_text(src_text, doc_id_for(config.src_corpus), src_lexicon);
    const Document tgt_doc =
        analyze_text(tgt_text, doc_id_for(config.tgt_corpus), tgt_lexicon);
    src_counts = count_phrases(src_doc);
    tgt_counts = count_phrases(tgt_doc);
    write_file((out / kSrcPhrasesFile).string(),
               phrase_counts_tsv(src_doc.id, src_counts));
    write_file((out / kTgtPhrasesFile).string(),
               phrase_counts_tsv(tgt_doc.id, tgt_counts));
  } catch (const DataError& e) {
    throw StageError("chunk", e.what());
  }

  AlignmentTable table;
  try {
    table = align_corpora(src_counts, tgt_counts, dict);
    write_file((out / kAlignmentsFile).string(), alignment_table_tsv(table));
  } catch (const DataError& e) {
    throw StageError("align", e.what());
  }

  try {
    std::vector<std::string> keys;
    for (const auto& [key, alignments] : table.entries) {
      (void)alignments;
      keys.push_back(key);
    }
    const PhraseForest forest = build_forest(keys);
    // annotate with threshold 1 so every alignment survives into the
    // artifact; evaluate and sweep re-threshold from the attributes
    annotate(corpus, forest, table, tgt_inv, chain, src_inv, 1, src_lexicon);
    write_file((out / kAnnotatedFile).string(), serialize(corpus.doc));
  } catch (const DataError& e) {
    throw StageError("annotate", e.what());
  }

  EvalReport report;
  try {
    report = evaluate(corpus, config.threshold);
    write_file((out / kReportFile).string(), report_text(report));
  } catch (const DataError& e) {
    throw StageError("evaluate", e.what());
  }

  try {
    const std::vector<SweepRow> rows = sweep(corpus, default_thresholds(corpus));
    write_file((out / kSweepFile).string(), sweep_tsv(rows));
  } catch (const DataError& e) {
    throw StageError("sweep", e.what());
  }
  return report;
}

}  // namespace npwsd
