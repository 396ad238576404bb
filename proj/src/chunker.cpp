#include "npwsd/chunker.hpp"

#include <sstream>

#include "npwsd/errors.hpp"
#include "npwsd/util.hpp"

namespace npwsd {

namespace {

bool is_phrase_head(PosCategory pos) {
  return pos == PosCategory::noun || pos == PosCategory::adjective;
}

bool is_phrase_interior(PosCategory pos) {
  return is_phrase_head(pos) || pos == PosCategory::preposition ||
         pos == PosCategory::determiner || pos == PosCategory::conjunction;
}

Phrase make_phrase(const std::vector<Token>& tokens, std::size_t begin,
                   std::size_t end) {
  Phrase p;
  std::vector<std::string> lemmas;
  for (std::size_t i = begin; i < end; ++i) {
    p.tokens.push_back(tokens[i]);
    lemmas.push_back(tokens[i].lemma);
    if (is_open_class(tokens[i].pos))
      p.open_class_lemmas.push_back(tokens[i].lemma);
  }
  p.key = join(lemmas, " ");
  return p;
}

}  // namespace

void validate_phrase(const Phrase& p) {
  if (p.tokens.size() < 2) throw DataError("phrase with fewer than two tokens");
  if (!is_phrase_head(p.tokens.front().pos) || !is_phrase_head(p.tokens.back().pos))
    throw DataError("phrase \"" + p.key + "\" must start and end with noun or adjective");
  std::vector<std::string> open;
  std::vector<std::string> lemmas;
  for (const Token& t : p.tokens) {
    validate_token(t);
    if (!is_phrase_interior(t.pos))
      throw DataError("phrase \"" + p.key + "\" contains a " + pos_name(t.pos));
    if (is_open_class(t.pos)) open.push_back(t.lemma);
    lemmas.push_back(t.lemma);
  }
  if (open.size() < 2 || open.size() > 3)
    throw DataError("phrase \"" + p.key + "\" has " + std::to_string(open.size()) +
                    " open-class words");
  if (open != p.open_class_lemmas)
    throw DataError("phrase \"" + p.key + "\" open_class_lemmas out of sync");
  if (p.key != join(lemmas, " "))
    throw DataError("phrase key \"" + p.key + "\" does not match its lemmas");
}

std::vector<Phrase> extract_noun_phrases(const Sentence& sentence) {
  const std::vector<Token>& toks = sentence.tokens;
  std::vector<Phrase> out;
  std::size_t i = 0;
  while (i < toks.size()) {
    if (!is_phrase_head(toks[i].pos)) {
      ++i;
      continue;
    }
    // Longest run of pattern-interior tokens starting here; the span ends at
    // the last noun/adjective inside that run.
    std::size_t run_end = i;
    while (run_end < toks.size() && is_phrase_interior(toks[run_end].pos))
      ++run_end;
    std::size_t last_head = i;
    for (std::size_t j = i; j < run_end; ++j)
      if (is_phrase_head(toks[j].pos)) last_head = j;
    if (last_head == i) {
      ++i;  // no second open-class word: not a phrase
      continue;
    }
    const std::size_t end = last_head + 1;
    std::size_t open_count = 0;
    for (std::size_t j = i; j < end; ++j)
      if (is_open_class(toks[j].pos)) ++open_count;
    if (open_count >= 2 && open_count <= 3)
      out.push_back(make_phrase(toks, i, end));
    i = end;  // a too-long span is discarded whole
  }
  return out;
}

PhraseCounts count_phrases(const Document& doc) {
  PhraseCounts counts;
  for (const Sentence& sent : doc.sentences) {
    for (Phrase& p : extract_noun_phrases(sent)) {
      auto [it, inserted] =
          counts.try_emplace(p.key, PhraseEntry{p.open_class_lemmas, 0});
      it->second.count += 1;
      if (!inserted && it->second.open_class_lemmas != p.open_class_lemmas)
        throw DataError("phrase key \"" + p.key +
                        "\" seen with two different open-class analyses");
    }
  }
  return counts;
}

std::string phrase_counts_tsv(const std::string& doc_id, const PhraseCounts& counts) {
  std::ostringstream out;
  for (const auto& [key, entry] : counts)
    out << doc_id << '\t' << key << '\t' << entry.open_class_lemmas.size() << '\t'
        << entry.count << '\n';
  return out.str();
}

PhraseCounts parse_phrase_tsv(const std::string& text, const std::string& name,
                              const Lexicon& lexicon) {
  PhraseCounts counts;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 4)
      throw DataError(name, lineno,
                      "expected doc_id<TAB>phrase_key<TAB>open_class_count<TAB>count");
    const std::string& key = fields[1];
    const long open_count = parse_long(fields[2], "open_class_count");
    const long count = parse_long(fields[3], "occurrence_count");
    if (count < 1) throw DataError(name, lineno, "occurrence_count must be >= 1");

    std::vector<std::string> open;
    for (const std::string& lemma : split_ws(key))
      if (is_open_class(analyze(lemma, lexicon).pos)) open.push_back(lemma);
    if (static_cast<long>(open.size()) != open_count)
      throw DataError(name, lineno,
                      "open_class_count " + std::to_string(open_count) + " for \"" + key +
                          "\" does not match the lexicon analysis (" +
                          std::to_string(open.size()) + ")");

    auto [it, inserted] = counts.try_emplace(key, PhraseEntry{open, 0});
    it->second.count += count;
    if (!inserted && it->second.open_class_lemmas != open)
      throw DataError(name, lineno, "conflicting open-class analysis for \"" + key + "\"");
  }
  return counts;
}

PhraseCounts load_phrase_tsv(const std::string& path, const Lexicon& lexicon) {
  return parse_phrase_tsv(read_file(path), path, lexicon);
}

std::vector<std::string> parse_phrase_tsv_keys(const std::string& text,
                                               const std::string& name) {
  std::vector<std::string> keys;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 4)
      throw DataError(name, lineno,
                      "expected doc_id<TAB>phrase_key<TAB>open_class_count<TAB>count");
    keys.push_back(fields[1]);
  }
  return keys;
}

}  // namespace npwsd
