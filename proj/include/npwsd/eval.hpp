#ifndef NPWSD_EVAL_HPP
#define NPWSD_EVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "npwsd/annotator.hpp"

namespace npwsd {

struct EvalReport {
  long amenable_words = 0;
  long phrase_words = 0;
  long covered_words = 0;
  long retained_words = 0;

  double phrase_rate() const;
  double coverage() const;
  // Absent when no word is covered; a 0/0 precision is not a number.
  std::optional<double> potential_precision() const;
};

void validate_report(const EvalReport& r);

std::string report_text(const EvalReport& r);
std::string report_json(const EvalReport& r);

// A word is counted as covered when its phrase has at least one alignment
// with frequency >= threshold; it is retained when additionally its gold
// sense (the id "lemma%lexsn") appears among the supported senses at that
// threshold. A covered word with no supported senses loses its gold sense.
EvalReport evaluate(const ParsedCorpus& corpus, long threshold);

struct SweepRow {
  long threshold = 0;
  long covered_words = 0;
  long retained_words = 0;
  double coverage = 0.0;
  std::optional<double> potential_precision;
};

// One row per threshold; thresholds must be sorted ascending.
std::vector<SweepRow> sweep(const ParsedCorpus& corpus,
                            const std::vector<long>& thresholds);

// All distinct alignment frequencies in the corpus, plus 0, ascending.
std::vector<long> default_thresholds(const ParsedCorpus& corpus);

void validate_sweep(const std::vector<SweepRow>& rows);

// header: threshold coverage covered_words potential_precision retained_words
std::string sweep_tsv(const std::vector<SweepRow>& rows);

}  // namespace npwsd

#endif
