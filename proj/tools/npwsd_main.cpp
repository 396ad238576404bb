// npwsd: bilingual noun-phrase sense filtering toolkit.
//
// Subcommands cover the individual stages (chunk, align, match, annotate,
// evaluate, sweep) plus an end-to-end pipeline and a synthetic fixture
// generator. Exit codes: 0 success, 1 usage error, 2 data error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "npwsd/aligner.hpp"
#include "npwsd/annotator.hpp"
#include "npwsd/chunker.hpp"
#include "npwsd/errors.hpp"
#include "npwsd/eval.hpp"
#include "npwsd/fixture.hpp"
#include "npwsd/matcher.hpp"
#include "npwsd/pipeline.hpp"
#include "npwsd/sense_filter.hpp"
#include "npwsd/util.hpp"
#include "npwsd/xml.hpp"

namespace {

using namespace npwsd;

std::string default_doc_id(const std::string& input) {
  const std::string stem = std::filesystem::path(input).stem().string();
  return stem.empty() ? "doc" : stem;
}

int run_chunk(const std::string& lexicon_path, const std::string& input,
              const std::string& output, std::string doc_id) {
  const Lexicon lexicon = load_lexicon(lexicon_path);
  if (doc_id.empty()) doc_id = default_doc_id(input);
  const Document doc = analyze_text(read_file(input), doc_id, lexicon);
  write_file(output, phrase_counts_tsv(doc.id, count_phrases(doc)));
  return 0;
}

int run_align(const std::string& dict_path, const std::string& src_path,
              const std::string& tgt_path, const std::string& src_lexicon_path,
              const std::string& tgt_lexicon_path, const std::string& output) {
  const BilingualDictionary dict = load_dictionary(dict_path);
  const Lexicon src_lexicon = load_lexicon(src_lexicon_path);
  const Lexicon tgt_lexicon = load_lexicon(tgt_lexicon_path);
  const PhraseCounts src = load_phrase_tsv(src_path, src_lexicon);
  const PhraseCounts tgt = load_phrase_tsv(tgt_path, tgt_lexicon);
  write_file(output, alignment_table_tsv(align_corpora(src, tgt, dict)));
  return 0;
}

int run_match(const std::string& forest_path, const std::string& lexicon_path,
              const std::string& input) {
  const PhraseForest forest =
      build_forest(parse_phrase_tsv_keys(read_file(forest_path), forest_path));
  const Lexicon lexicon = load_lexicon(lexicon_path);
  const Document doc = analyze_text(read_file(input), "input", lexicon);
  for (const Sentence& sentence : doc.sentences)
    for (const Match& m : match_text(sentence.tokens, forest))
      std::cout << m.start << '\t' << m.end << '\t' << m.phrase_key << '\n';
  return 0;
}

int run_annotate(const std::string& corpus_path, const std::string& alignments_path,
                 const std::string& lexicon_path, const std::string& tgt_inv_path,
                 const std::string& src_inv_path,
                 const std::vector<std::string>& map_paths,
                 const std::string& src_index, const std::string& tgt_index,
                 long threshold, const std::string& output) {
  const AlignmentTable table = load_alignment_tsv(alignments_path);
  SenseInventory src_inv = load_inventory(src_inv_path, "source");
  SenseInventory tgt_inv = load_inventory(tgt_inv_path, "target");
  if (!src_index.empty()) load_sense_index(src_inv, src_index);
  if (!tgt_index.empty()) load_sense_index(tgt_inv, tgt_index);
  MappingChain chain;
  for (const std::string& m : map_paths) chain.push_back(load_mapping(m));
  const Lexicon lexicon = load_lexicon(lexicon_path);

  std::vector<std::string> keys;
  for (const auto& [key, alignments] : table.entries) {
    (void)alignments;
    keys.push_back(key);
  }
  const PhraseForest forest = build_forest(keys);

  ParsedCorpus corpus = load_corpus(corpus_path);
  annotate(corpus, forest, table, tgt_inv, chain, src_inv, threshold, lexicon);
  write_file(output, serialize(corpus.doc));
  return 0;
}

int run_evaluate(const std::string& corpus_path, long threshold, bool as_json) {
  const ParsedCorpus corpus = load_corpus(corpus_path);
  const EvalReport report = evaluate(corpus, threshold);
  // the default text report is tab-separated already
  std::cout << (as_json ? report_json(report) : report_text(report));
  return 0;
}

int run_sweep(const std::string& corpus_path, const std::string& thresholds_arg,
              const std::string& output) {
  const ParsedCorpus corpus = load_corpus(corpus_path);
  std::vector<long> thresholds;
  if (thresholds_arg.empty()) {
    thresholds = default_thresholds(corpus);
  } else {
    for (const std::string& part : split(thresholds_arg, ',')) {
      try {
        thresholds.push_back(parse_long(trim(part), "threshold"));
      } catch (const DataError& e) {
        throw UsageError(e.what());
      }
    }
    for (long t : thresholds)
      if (t < 0) throw UsageError("thresholds must be non-negative");
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
      throw UsageError("thresholds must be sorted ascending");
  }
  const std::string tsv = sweep_tsv(sweep(corpus, thresholds));
  if (output.empty() || output == "-")
    std::cout << tsv;
  else
    write_file(output, tsv);
  return 0;
}

int run_pipeline_cmd(const std::string& config_path, const std::string& out_dir,
                     long threshold_override, bool has_threshold) {
  PipelineConfig config = load_pipeline_config(config_path);
  if (!out_dir.empty()) config.out_dir = out_dir;
  if (has_threshold) config.threshold = threshold_override;
  const EvalReport report = run_pipeline(config);
  std::cout << report_text(report);
  return 0;
}

int run_fixture(const std::string& out_dir, long seed, int noise, int eval_noise) {
  FixtureParams params;
  params.seed = static_cast<std::uint32_t>(seed);
  params.noise_sentences = noise;
  params.eval_noise_sentences = eval_noise;
  generate_fixture(out_dir, params);
  return 0;
}

int run_invert_map(const std::string& input, const std::string& output) {
  write_file(output, mapping_tsv(invert_mapping(load_mapping(input))));
  return 0;
}

// Expands a subcommand's "--config <file>" into ordinary flags: one
// key = value line per flag, '#' comments. Explicit command-line flags win
// over config values. The pipeline subcommand keeps its own --config (the
// file doubles as the run_pipeline input), so it is left untouched.
std::vector<std::string> expand_config_args(const std::vector<std::string>& args) {
  if (args.size() < 2 || args[1] == "pipeline") return args;
  std::string config_path;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i >= 2 && args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
      continue;
    }
    out.push_back(args[i]);
  }
  if (config_path.empty()) return args;

  std::istringstream in(read_file(config_path));
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> expanded;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw DataError(config_path, lineno, "expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw DataError(config_path, lineno, "empty key");
    const std::string flag = "--" + key;
    if (std::find(out.begin(), out.end(), flag) != out.end()) continue;
    expanded.push_back(flag);
    expanded.push_back(value);
  }
  out.insert(out.begin() + 2, expanded.begin(), expanded.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bilingual noun-phrase sense filtering toolkit"};
  app.set_version_flag("--version", "npwsd 1.0.0");
  app.require_subcommand(0, 1);

  std::vector<std::string> invert_args;
  app.add_option("--invert-map", invert_args, "invert a synset mapping file: IN OUT")
      ->expected(2);

  std::string config_doc;  // --config is expanded before parsing; flag kept for --help
  auto* chunk = app.add_subcommand("chunk", "extract noun phrases from text");
  chunk->add_option("--config", config_doc, "flat key=value file mirroring the flags");
  std::string chunk_lexicon, chunk_input, chunk_output, chunk_doc_id;
  chunk->add_option("--lexicon", chunk_lexicon, "lemma/POS lexicon")->required();
  chunk->add_option("--input", chunk_input, "text, one sentence per line")->required();
  chunk->add_option("--output", chunk_output, "phrase TSV")->required();
  chunk->add_option("--doc-id", chunk_doc_id, "document id (default: input stem)");

  auto* align = app.add_subcommand("align", "align phrases across languages");
  align->add_option("--config", config_doc, "flat key=value file mirroring the flags");
  std::string align_dict, align_src, align_tgt, align_src_lex, align_tgt_lex,
      align_output;
  align->add_option("--dict", align_dict, "bilingual lemma dictionary")->required();
  align->add_option("--src", align_src, "source phrase TSV")->required();
  align->add_option("--tgt", align_tgt, "target phrase TSV")->required();
  align->add_option("--src-lexicon", align_src_lex,
                    "source lexicon, recovers open-class words of the keys")
      ->required();
  align->add_option("--tgt-lexicon", align_tgt_lex, "target lexicon")->required();
  align->add_option("--output", align_output, "alignment TSV")->required();

  auto* match = app.add_subcommand("match", "debug: detect stored phrases in text");
  match->add_option("--config", config_doc, "flat key=value file mirroring the flags");
  std::string match_forest, match_lexicon, match_input;
  match->add_option("--forest", match_forest, "phrase TSV to load")->required();
  match->add_option("--lexicon", match_lexicon, "lemma/POS lexicon")->required();
  match->add_option("--input", match_input, "text, one sentence per line")->required();

  auto* annotate_cmd = app.add_subcommand("annotate", "enrich a sense-tagged corpus");
  annotate_cmd->add_option("--config", config_doc, "flat key=value file mirroring the flags");
  std::string ann_corpus, ann_alignments, ann_lexicon, ann_tgt_inv, ann_src_inv,
      ann_output, ann_src_index, ann_tgt_index;
  std::vector<std::string> ann_maps;
  long ann_threshold = 1;
  annotate_cmd->add_option("--corpus", ann_corpus, "sense-tagged XML corpus")->required();
  annotate_cmd->add_option("--alignments", ann_alignments, "alignment TSV")->required();
  annotate_cmd->add_option("--lexicon", ann_lexicon, "lemma/POS lexicon")->required();
  annotate_cmd->add_option("--tgt-inventory", ann_tgt_inv, "target sense inventory")
      ->required();
  annotate_cmd->add_option("--src-inventory", ann_src_inv, "source sense inventory")
      ->required();
  annotate_cmd->add_option("--map", ann_maps,
                           "synset mapping file, repeatable, applied in order");
  annotate_cmd->add_option("--src-sense-index", ann_src_index,
                           "optional sense-number index for the source inventory");
  annotate_cmd->add_option("--tgt-sense-index", ann_tgt_index,
                           "optional sense-number index for the target inventory");
  annotate_cmd
      ->add_option("--threshold", ann_threshold,
                   "ignore alignments with frequency below this (>= comparison)")
      ->check(CLI::NonNegativeNumber);
  annotate_cmd->add_option("--output", ann_output, "enriched XML")->required();

  auto* evaluate_cmd = app.add_subcommand("evaluate", "coverage and potential precision");
  evaluate_cmd->add_option("--config", config_doc, "flat key=value file mirroring the flags");
  std::string eval_corpus;
  long eval_threshold = 1;
  bool eval_json = false, eval_tsv = false;
  evaluate_cmd->add_option("--corpus", eval_corpus, "enriched XML corpus")->required();
  evaluate_cmd
      ->add_option("--threshold", eval_threshold,
                   "count alignments with frequency >= this")
      ->check(CLI::NonNegativeNumber);
  auto* eval_json_flag = evaluate_cmd->add_flag("--json", eval_json, "JSON report");
  evaluate_cmd->add_flag("--tsv", eval_tsv, "TSV report (the default format)")
      ->excludes(eval_json_flag);

  auto* sweep_cmd = app.add_subcommand("sweep", "threshold sweep over an enriched corpus");
  sweep_cmd->add_option("--config", config_doc, "flat key=value file mirroring the flags");
  std::string sweep_corpus, sweep_thresholds, sweep_output;
  sweep_cmd->add_option("--corpus", sweep_corpus, "enriched XML corpus")->required();
  sweep_cmd->add_option("--thresholds", sweep_thresholds,
                        "comma-separated ascending list (default: all observed "
                        "frequencies plus 0)");
  sweep_cmd->add_option("--output", sweep_output, "sweep TSV (default: stdout)");

  auto* pipeline_cmd = app.add_subcommand("pipeline", "run every stage end to end");
  std::string pipe_config, pipe_out_dir;
  long pipe_threshold = 0;
  pipeline_cmd->add_option("--config", pipe_config, "flat key=value config")->required();
  pipeline_cmd->add_option("--out-dir", pipe_out_dir, "artifact directory override");
  auto* pipe_threshold_opt =
      pipeline_cmd
          ->add_option("--threshold", pipe_threshold, "evaluation threshold override")
          ->check(CLI::NonNegativeNumber);

  auto* fixture_cmd = app.add_subcommand("fixture", "generate a synthetic fixture");
  std::string fix_out_dir;
  long fix_seed = 42;
  int fix_noise = 30, fix_eval_noise = 5;
  fixture_cmd->add_option("--out-dir", fix_out_dir, "output directory")->required();
  fixture_cmd->add_option("--seed", fix_seed, "random seed (default 42)");
  fixture_cmd->add_option("--noise", fix_noise, "noise sentences per news corpus")
      ->check(CLI::NonNegativeNumber);
  fixture_cmd
      ->add_option("--eval-noise", fix_eval_noise,
                   "unmatched amenable nouns in the gold corpus")
      ->check(CLI::NonNegativeNumber);

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->set_version_flag("--version", "npwsd 1.0.0");

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = expand_config_args(args);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::vector<const char*> arg_ptrs;
  for (const std::string& a : args) arg_ptrs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(arg_ptrs.size()), arg_ptrs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (!invert_args.empty()) return run_invert_map(invert_args[0], invert_args[1]);
    if (chunk->parsed())
      return run_chunk(chunk_lexicon, chunk_input, chunk_output, chunk_doc_id);
    if (align->parsed())
      return run_align(align_dict, align_src, align_tgt, align_src_lex,
                       align_tgt_lex, align_output);
    if (match->parsed()) return run_match(match_forest, match_lexicon, match_input);
    if (annotate_cmd->parsed())
      return run_annotate(ann_corpus, ann_alignments, ann_lexicon, ann_tgt_inv,
                          ann_src_inv, ann_maps, ann_src_index, ann_tgt_index,
                          ann_threshold, ann_output);
    if (evaluate_cmd->parsed()) {
      (void)eval_tsv;
      return run_evaluate(eval_corpus, eval_threshold, eval_json);
    }
    if (sweep_cmd->parsed()) return run_sweep(sweep_corpus, sweep_thresholds, sweep_output);
    if (pipeline_cmd->parsed())
      return run_pipeline_cmd(pipe_config, pipe_out_dir, pipe_threshold,
                              pipe_threshold_opt->count() > 0);
    if (fixture_cmd->parsed())
      return run_fixture(fix_out_dir, fix_seed, fix_noise, fix_eval_noise);
    std::cerr << app.help();
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
