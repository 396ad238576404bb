#ifndef NPWSD_ALIGNER_HPP
#define NPWSD_ALIGNER_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "npwsd/chunker.hpp"

namespace npwsd {

// Source lemma -> set of target lemmas; many-to-many, all lowercase.
class BilingualDictionary {
public:
  void add(const std::string& source, const std::string& target);
  const std::set<std::string>* translations(const std::string& source) const;
  bool translates(const std::string& source, const std::string& target) const;
  BilingualDictionary inverted() const;
  const std::map<std::string, std::set<std::string>>& entries() const {
    return entries_;
  }

private:
  std::map<std::string, std::set<std::string>> entries_;
};

void validate_dictionary(const BilingualDictionary& dict);

// File format: source_lemma<TAB>target_lemma per line, '#' comments.
BilingualDictionary load_dictionary(const std::string& path);
BilingualDictionary parse_dictionary(const std::string& text, const std::string& name);

struct Alignment {
  std::string target_key;
  long frequency = 0;  // min(source count, target count)
};

// Source phrase key -> aligned target phrases, frequency-descending.
struct AlignmentTable {
  std::map<std::string, std::vector<Alignment>> entries;

  const std::vector<Alignment>* find(const std::string& source_key) const;
};

// True iff the phrases have the same number of open-class words and some
// bijection pairs every source open-class lemma with a distinct target
// lemma it translates to.
bool can_align(const Phrase& src, const Phrase& tgt, const BilingualDictionary& dict);
bool can_align(const std::vector<std::string>& src_open,
               const std::vector<std::string>& tgt_open,
               const BilingualDictionary& dict);

// Equivalent to testing can_align over the full cross product; the
// implementation walks an index from translated lemmas to candidate
// target phrases instead.
AlignmentTable align_corpora(const PhraseCounts& src, const PhraseCounts& tgt,
                             const BilingualDictionary& dict);

void validate_table(const AlignmentTable& table, const PhraseCounts& src,
                    const PhraseCounts& tgt, const BilingualDictionary& dict);

// TSV rows: src_key<TAB>tgt_key<TAB>frequency, sorted by source key then
// descending frequency then target key.
std::string alignment_table_tsv(const AlignmentTable& table);
AlignmentTable parse_alignment_tsv(const std::string& text, const std::string& name);
AlignmentTable load_alignment_tsv(const std::string& path);

}  // namespace npwsd

#endif
