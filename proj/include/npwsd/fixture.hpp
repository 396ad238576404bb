#ifndef NPWSD_FIXTURE_HPP
#define NPWSD_FIXTURE_HPP

#include <cstdint>
#include <string>

namespace npwsd {

// Synthetic bilingual fixture: news-style corpora in two languages,
// lexicons, a bilingual dictionary, sense inventories, a three-link
// mapping chain and a gold-annotated evaluation corpus. The data covers
// the interesting filter behaviours: an alignment that pins down exactly
// one sense, one that supports every sense of its word, a spurious
// once-seen alignment, a sense lost to a missing mapping hop, and a word
// keeping 8 of its 11 senses.
struct FixtureParams {
  std::uint32_t seed = 42;
  int noise_sentences = 30;      // per news corpus
  int eval_noise_sentences = 5;  // unmatched amenable nouns in the gold corpus
};

// Writes the fixture files plus a pipeline.config into dir. Deterministic:
// the same seed produces identical bytes.
void generate_fixture(const std::string& dir, const FixtureParams& params);

}  // namespace npwsd

#endif
