#ifndef NPWSD_CORPUS_HPP
#define NPWSD_CORPUS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace npwsd {

enum class PosCategory {
  noun,
  adjective,
  preposition,
  determiner,
  conjunction,
  verb,
  other,
};

// Open-class words are the content-bearing ones; phrase patterns only ever
// contain nouns and adjectives, but verbs count as open class elsewhere.
bool is_open_class(PosCategory pos);

PosCategory parse_pos(const std::string& name);
std::string pos_name(PosCategory pos);

struct Token {
  std::string surface;
  std::string lemma;  // lowercased canonical form
  PosCategory pos = PosCategory::other;
};

void validate_token(const Token& t);

// One analysis per surface form: the prior most likely lemma and tag.
// Lookup keys are lowercased.
class Lexicon {
public:
  struct Entry {
    std::string lemma;
    PosCategory pos = PosCategory::other;
  };

  void add(const std::string& surface, const std::string& lemma, PosCategory pos);
  const Entry* find(const std::string& surface) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, Entry>& entries() const { return entries_; }

private:
  std::map<std::string, Entry> entries_;
};

void validate_lexicon(const Lexicon& lex);

// File format: surface<TAB>lemma<TAB>pos, one entry per line, '#' comments.
// A duplicate surface replaces the earlier entry and warns on diag.
Lexicon load_lexicon(const std::string& path, std::ostream* diag = nullptr);
Lexicon parse_lexicon(const std::string& text, const std::string& name,
                      std::ostream* diag = nullptr);

struct Sentence {
  std::vector<Token> tokens;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
};

// Whitespace split, then leading/trailing ASCII punctuation characters are
// peeled off into their own units.
std::vector<std::string> tokenize(const std::string& raw_text);

// Lexicon analysis with identity fallback: unknown surfaces get their
// lowercased form as lemma and pos=other.
Token analyze(const std::string& surface, const Lexicon& lexicon);

// Newline-delimited sentences, analyzed with the lexicon.
Document analyze_text(const std::string& text, const std::string& doc_id,
                      const Lexicon& lexicon);

}  // namespace npwsd

#endif
