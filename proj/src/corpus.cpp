#include "npwsd/corpus.hpp"

#include <cctype>
#include <iostream>
#include <sstream>

#include "npwsd/errors.hpp"
#include "npwsd/util.hpp"

namespace npwsd {

bool is_open_class(PosCategory pos) {
  return pos == PosCategory::noun || pos == PosCategory::adjective ||
         pos == PosCategory::verb;
}

PosCategory parse_pos(const std::string& name) {
  if (name == "noun") return PosCategory::noun;
  if (name == "adjective") return PosCategory::adjective;
  if (name == "preposition") return PosCategory::preposition;
  if (name == "determiner") return PosCategory::determiner;
  if (name == "conjunction") return PosCategory::conjunction;
  if (name == "verb") return PosCategory::verb;
  if (name == "other") return PosCategory::other;
  throw DataError("unknown part-of-speech tag \"" + name + "\"");
}

std::string pos_name(PosCategory pos) {
  switch (pos) {
    case PosCategory::noun: return "noun";
    case PosCategory::adjective: return "adjective";
    case PosCategory::preposition: return "preposition";
    case PosCategory::determiner: return "determiner";
    case PosCategory::conjunction: return "conjunction";
    case PosCategory::verb: return "verb";
    case PosCategory::other: return "other";
  }
  return "other";
}

void validate_token(const Token& t) {
  if (t.surface.empty()) throw DataError("token with empty surface");
  if (t.lemma.empty()) throw DataError("token \"" + t.surface + "\" has empty lemma");
  if (t.lemma != to_lower_ascii(t.lemma))
    throw DataError("token lemma \"" + t.lemma + "\" is not lowercase");
}

void Lexicon::add(const std::string& surface, const std::string& lemma,
                  PosCategory pos) {
  entries_[to_lower_ascii(surface)] = Entry{to_lower_ascii(lemma), pos};
}

const Lexicon::Entry* Lexicon::find(const std::string& surface) const {
  auto it = entries_.find(to_lower_ascii(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

void validate_lexicon(const Lexicon& lex) {
  for (const auto& [surface, entry] : lex.entries()) {
    if (surface.empty()) throw DataError("lexicon entry with empty surface");
    if (entry.lemma.empty())
      throw DataError("lexicon entry \"" + surface + "\" has empty lemma");
    if (entry.lemma != to_lower_ascii(entry.lemma))
      throw DataError("lexicon lemma \"" + entry.lemma + "\" is not lowercase");
  }
}

Lexicon parse_lexicon(const std::string& text, const std::string& name,
                      std::ostream* diag) {
  std::ostream& warn = diag ? *diag : std::cerr;
  Lexicon lex;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 3)
      throw DataError(name, lineno, "expected surface<TAB>lemma<TAB>pos");
    const std::string surface = to_lower_ascii(trim(fields[0]));
    const std::string lemma = to_lower_ascii(trim(fields[1]));
    if (surface.empty() || lemma.empty())
      throw DataError(name, lineno, "empty surface or lemma");
    PosCategory pos;
    try {
      pos = parse_pos(trim(fields[2]));
    } catch (const DataError& e) {
      throw DataError(name, lineno, e.what());
    }
    if (lex.find(surface) != nullptr)
      warn << name << ":" << lineno << ": warning: duplicate surface \""
           << surface << "\", last entry wins\n";
    lex.add(surface, lemma, pos);
  }
  return lex;
}

Lexicon load_lexicon(const std::string& path, std::ostream* diag) {
  return parse_lexicon(read_file(path), path, diag);
}

namespace {

bool is_ascii_punct(char c) {
  const unsigned char u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u);
}

}  // namespace

std::vector<std::string> tokenize(const std::string& raw_text) {
  std::vector<std::string> out;
  for (const std::string& unit : split_ws(raw_text)) {
    std::size_t begin = 0;
    std::size_t end = unit.size();
    std::vector<std::string> leading;
    while (begin < end && is_ascii_punct(unit[begin])) {
      leading.push_back(unit.substr(begin, 1));
      ++begin;
    }
    std::vector<std::string> trailing;
    while (end > begin && is_ascii_punct(unit[end - 1])) {
      trailing.push_back(unit.substr(end - 1, 1));
      --end;
    }
    for (auto& t : leading) out.push_back(std::move(t));
    if (end > begin) out.push_back(unit.substr(begin, end - begin));
    // trailing punctuation was collected right-to-left
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it)
      out.push_back(std::move(*it));
  }
  return out;
}

Token analyze(const std::string& surface, const Lexicon& lexicon) {
  if (const Lexicon::Entry* e = lexicon.find(surface))
    return Token{surface, e->lemma, e->pos};
  return Token{surface, to_lower_ascii(surface), PosCategory::other};
}

Document analyze_text(const std::string& text, const std::string& doc_id,
                      const Lexicon& lexicon) {
  Document doc;
  doc.id = doc_id;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Sentence sent;
    for (const std::string& surface : tokenize(line))
      sent.tokens.push_back(analyze(surface, lexicon));
    if (!sent.tokens.empty()) doc.sentences.push_back(std::move(sent));
  }
  return doc;
}

}  // namespace npwsd
