#ifndef NPWSD_PIPELINE_HPP
#define NPWSD_PIPELINE_HPP

#include <string>
#include <vector>

#include "npwsd/eval.hpp"

namespace npwsd {

// End-to-end run: chunk both corpora, align, annotate the gold corpus,
// evaluate at the configured threshold and sweep every observed frequency.
// Every artifact is written with canonical formatting so reruns are
// byte-identical.
struct PipelineConfig {
  std::string src_corpus;
  std::string tgt_corpus;
  std::string eval_corpus;
  std::string src_lexicon;
  std::string tgt_lexicon;
  std::string dictionary;
  std::string src_inventory;
  std::string tgt_inventory;
  std::vector<std::string> maps;  // chain files, applied in order
  long threshold = 1;
  std::string out_dir;
  long seed = 0;  // recorded only; used by fixture generation
};

// Flat key=value file; keys mirror the pipeline flags (src-corpus, ...,
// out-dir). Relative paths are resolved against the config file location.
PipelineConfig load_pipeline_config(const std::string& path);

// Fail-fast check that every referenced file exists and the threshold is
// sane. Errors are tagged with the stage they belong to.
void validate_config(const PipelineConfig& config);

// Artifact names inside out_dir.
inline constexpr const char* kSrcPhrasesFile = "src_phrases.tsv";
inline constexpr const char* kTgtPhrasesFile = "tgt_phrases.tsv";
inline constexpr const char* kAlignmentsFile = "alignments.tsv";
inline constexpr const char* kAnnotatedFile = "annotated.xml";
inline constexpr const char* kReportFile = "report.txt";
inline constexpr const char* kSweepFile = "sweep.tsv";

EvalReport run_pipeline(const PipelineConfig& config);

}  // namespace npwsd

#endif
