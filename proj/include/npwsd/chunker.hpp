#ifndef NPWSD_CHUNKER_HPP
#define NPWSD_CHUNKER_HPP

#include <map>
#include <string>
#include <vector>

#include "npwsd/corpus.hpp"

namespace npwsd {

// A candidate noun phrase: first and last token are noun or adjective,
// interior tokens may also be prepositions, determiners or conjunctions,
// and the phrase holds two or three open-class words in total.
struct Phrase {
  std::vector<Token> tokens;
  std::vector<std::string> open_class_lemmas;
  std::string key;  // space-joined lemmas of all tokens
};

void validate_phrase(const Phrase& p);

// Greedy left-to-right maximal spans. A maximal span with more than three
// open-class words is discarded whole; no sub-span is extracted from it.
std::vector<Phrase> extract_noun_phrases(const Sentence& sentence);

// Phrase type -> open-class lemmas + total occurrence count, aggregated
// over a corpus. Keyed by the canonical phrase key.
struct PhraseEntry {
  std::vector<std::string> open_class_lemmas;
  long count = 0;
};
using PhraseCounts = std::map<std::string, PhraseEntry>;

PhraseCounts count_phrases(const Document& doc);

// TSV rows: doc_id<TAB>phrase_key<TAB>open_class_count<TAB>occurrence_count,
// sorted by phrase key.
std::string phrase_counts_tsv(const std::string& doc_id, const PhraseCounts& counts);

// Reads the TSV back. The file does not say which lemmas are open class,
// so each key's words are re-analyzed with the lexicon; a mismatch against
// the recorded open_class_count is a data error.
PhraseCounts parse_phrase_tsv(const std::string& text, const std::string& name,
                              const Lexicon& lexicon);
PhraseCounts load_phrase_tsv(const std::string& path, const Lexicon& lexicon);

// Phrase keys only (for forest construction); no lexicon needed.
std::vector<std::string> parse_phrase_tsv_keys(const std::string& text,
                                               const std::string& name);

}  // namespace npwsd

#endif
