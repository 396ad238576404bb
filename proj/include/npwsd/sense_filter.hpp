#ifndef NPWSD_SENSE_FILTER_HPP
#define NPWSD_SENSE_FILTER_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "npwsd/aligner.hpp"

namespace npwsd {

// Synset ids are opaque strings; lexicographer sense-key notation such as
// "art%1:04:00::" is legal content.
struct SenseInventory {
  std::string language;
  std::map<std::string, std::set<std::string>> synsets;    // id -> lemmas
  std::map<std::string, std::vector<std::string>> senses;  // lemma -> ids, sense order
  // Optional: sense key parsed out of "<lemma>%<key>" style ids.
  std::map<std::string, std::string> sense_keys;  // id -> key text

  const std::vector<std::string>* senses_of(const std::string& lemma) const;
  bool is_sense_of(const std::string& synset_id, const std::string& lemma) const;
};

void validate_inventory(const SenseInventory& inv);

// File format: synset_id<TAB>lemma1,lemma2,... per line; a lemma's sense
// order is its line-encounter order. An optional index file of
// lemma<TAB>synset_id<TAB>sense_number lines overrides that order; when a
// lemma appears in the index it must be covered completely.
SenseInventory parse_inventory(const std::string& text, const std::string& name,
                               const std::string& language,
                               std::ostream* diag = nullptr);
SenseInventory load_inventory(const std::string& path, const std::string& language,
                              std::ostream* diag = nullptr);
void apply_sense_index(SenseInventory& inv, const std::string& text,
                       const std::string& name);
void load_sense_index(SenseInventory& inv, const std::string& path);

// Partial synset-to-synset map; lookups may fail.
struct SynsetMapping {
  std::string name;
  std::map<std::string, std::string> pairs;
};

SynsetMapping parse_mapping(const std::string& text, const std::string& name,
                            std::ostream* diag = nullptr);
SynsetMapping load_mapping(const std::string& path, std::ostream* diag = nullptr);
std::string mapping_tsv(const SynsetMapping& mapping);
SynsetMapping invert_mapping(const SynsetMapping& mapping, std::ostream* diag = nullptr);

// Left-to-right composition; the result is absent as soon as one hop is.
using MappingChain = std::vector<SynsetMapping>;

std::optional<std::string> map_synset(const std::string& synset_id,
                                      const MappingChain& chain);

// One entry per (alignment, admissible sense) pair, in alignment table
// order; several of the target phrase's words may support the same sense
// through one alignment, which still yields a single entry here.
struct SenseSupport {
  std::string sense_id;
  long frequency = 0;
};

struct FilterResult {
  std::string target;
  // Aggregate: sense -> summed frequency over every supporting
  // (alignment, word, synset) path.
  std::map<std::string, long> admissible;
  std::vector<SenseSupport> support;
  bool covered = false;  // some alignment passed the threshold
};

void validate_filter_result(const FilterResult& r, const SenseInventory& src_inv);

// Keeps the senses of `target` that some aligned target-language phrase
// supports through the mapping chain; alignments below the threshold are
// ignored. An unknown phrase key yields covered=false. Threshold compares
// as frequency >= threshold.
FilterResult filter_senses(const std::string& target, const std::string& phrase_key,
                           const AlignmentTable& table, const SenseInventory& tgt_inv,
                           const MappingChain& chain, const SenseInventory& src_inv,
                           long threshold);

}  // namespace npwsd

#endif
