#include "npwsd/eval.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "npwsd/errors.hpp"
#include "npwsd/util.hpp"

namespace npwsd {

double EvalReport::phrase_rate() const {
  return amenable_words == 0 ? 0.0
                             : static_cast<double>(phrase_words) / amenable_words;
}

double EvalReport::coverage() const {
  return amenable_words == 0 ? 0.0
                             : static_cast<double>(covered_words) / amenable_words;
}

std::optional<double> EvalReport::potential_precision() const {
  if (covered_words == 0) return std::nullopt;
  return static_cast<double>(retained_words) / covered_words;
}

void validate_report(const EvalReport& r) {
  if (r.amenable_words < 0 || r.phrase_words < 0 || r.covered_words < 0 ||
      r.retained_words < 0)
    throw DataError("negative count in evaluation report");
  if (!(r.retained_words <= r.covered_words && r.covered_words <= r.phrase_words &&
        r.phrase_words <= r.amenable_words))
    throw DataError("report counts must satisfy retained <= covered <= phrase <= amenable");
  if (r.coverage() > r.phrase_rate() + 1e-12 || r.phrase_rate() > 1.0 + 1e-12)
    throw DataError("report rates out of range");
  if (r.covered_words == 0 && r.potential_precision().has_value())
    throw DataError("precision must be absent with zero covered words");
}

std::string report_text(const EvalReport& r) {
  std::ostringstream out;
  out << "amenable_words\t" << r.amenable_words << '\n'
      << "phrase_words\t" << r.phrase_words << '\n'
      << "covered_words\t" << r.covered_words << '\n'
      << "retained_words\t" << r.retained_words << '\n'
      << "phrase_rate\t" << format_percent(r.phrase_rate()) << '\n'
      << "coverage\t" << format_percent(r.coverage()) << '\n'
      << "potential_precision\t" << format_percent(r.potential_precision()) << '\n';
  return out.str();
}

std::string report_json(const EvalReport& r) {
  nlohmann::json j;
  j["amenable_words"] = r.amenable_words;
  j["phrase_words"] = r.phrase_words;
  j["covered_words"] = r.covered_words;
  j["retained_words"] = r.retained_words;
  j["phrase_rate"] = r.phrase_rate();
  j["coverage"] = r.coverage();
  if (const auto p = r.potential_precision())
    j["potential_precision"] = *p;
  else
    j["potential_precision"] = nullptr;
  return j.dump(2) + "\n";
}

namespace {

bool any_at_least(const std::vector<long>& freqs, long threshold) {
  return std::any_of(freqs.begin(), freqs.end(),
                     [threshold](long f) { return f >= threshold; });
}

std::string gold_sense_id(const AnnotatedWord& w) {
  return w.lemma + "%" + w.lexsn;
}

}  // namespace

EvalReport evaluate(const ParsedCorpus& corpus, long threshold) {
  if (threshold < 0) throw DataError("threshold must be non-negative");
  EvalReport report;
  std::size_t total_words = 0;
  std::size_t gold_words = 0;
  for (const CorpusSentence& sentence : corpus.sentences) {
    for (const AnnotatedWord& w : sentence.words) {
      if (!w.is_punc) ++total_words;
      if (w.wnsn.has_value()) ++gold_words;
      if (!w.amenable) continue;
      ++report.amenable_words;
      if (!w.phrase) continue;
      ++report.phrase_words;
      if (!any_at_least(w.alignment_freqs, threshold)) continue;
      ++report.covered_words;
      if (w.lexsn.empty())
        throw DataError("covered word \"" + w.surface +
                        "\" has no lexsn, cannot score its gold sense");
      const std::string gold = gold_sense_id(w);
      for (const SenseSupport& s : w.alignments)
        if (s.frequency >= threshold && s.sense_id == gold) {
          ++report.retained_words;
          break;
        }
    }
  }
  if (total_words > 0 && gold_words == 0)
    throw DataError("corpus carries no gold senses, cannot score");
  return report;
}

std::vector<SweepRow> sweep(const ParsedCorpus& corpus,
                            const std::vector<long>& thresholds) {
  if (!std::is_sorted(thresholds.begin(), thresholds.end()))
    throw DataError("sweep thresholds must be sorted ascending");
  std::vector<SweepRow> rows;
  for (long t : thresholds) {
    const EvalReport r = evaluate(corpus, t);
    rows.push_back(SweepRow{t, r.covered_words, r.retained_words, r.coverage(),
                            r.potential_precision()});
  }
  return rows;
}

std::vector<long> default_thresholds(const ParsedCorpus& corpus) {
  std::set<long> values;
  values.insert(0);
  for (const CorpusSentence& sentence : corpus.sentences)
    for (const AnnotatedWord& w : sentence.words)
      for (long f : w.alignment_freqs) values.insert(f);
  return std::vector<long>(values.begin(), values.end());
}

void validate_sweep(const std::vector<SweepRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& row = rows[i];
    if (row.retained_words > row.covered_words)
      throw DataError("sweep row retains more words than it covers");
    if (row.covered_words == 0 && row.potential_precision.has_value())
      throw DataError("sweep row precision must be absent with zero covered words");
    if (i > 0) {
      if (rows[i - 1].threshold >= row.threshold)
        throw DataError("sweep thresholds must increase");
      if (row.coverage > rows[i - 1].coverage + 1e-12)
        throw DataError("coverage must be non-increasing in the threshold");
    }
  }
}

std::string sweep_tsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "threshold\tcoverage\tcovered_words\tpotential_precision\tretained_words\n";
  for (const SweepRow& row : rows)
    out << row.threshold << '\t' << format_percent(row.coverage) << '\t'
        << row.covered_words << '\t' << format_percent(row.potential_precision)
        << '\t' << row.retained_words << '\n';
  return out.str();
}

}  // namespace npwsd
