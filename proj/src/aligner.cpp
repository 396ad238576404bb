#include "npwsd/aligner.hpp"

#include <algorithm>
#include <sstream>

#include "npwsd/errors.hpp"
#include "npwsd/util.hpp"

namespace npwsd {

void BilingualDictionary::add(const std::string& source, const std::string& target) {
  entries_[to_lower_ascii(source)].insert(to_lower_ascii(target));
}

const std::set<std::string>* BilingualDictionary::translations(
    const std::string& source) const {
  auto it = entries_.find(source);
  return it == entries_.end() ? nullptr : &it->second;
}

bool BilingualDictionary::translates(const std::string& source,
                                     const std::string& target) const {
  const std::set<std::string>* t = translations(source);
  return t != nullptr && t->count(target) > 0;
}

BilingualDictionary BilingualDictionary::inverted() const {
  BilingualDictionary inv;
  for (const auto& [src, targets] : entries_)
    for (const std::string& tgt : targets) inv.add(tgt, src);
  return inv;
}

void validate_dictionary(const BilingualDictionary& dict) {
  for (const auto& [src, targets] : dict.entries()) {
    if (src.empty() || src != to_lower_ascii(src))
      throw DataError("dictionary source lemma \"" + src + "\" not lowercase or empty");
    for (const std::string& tgt : targets)
      if (tgt.empty() || tgt != to_lower_ascii(tgt))
        throw DataError("dictionary target lemma \"" + tgt + "\" not lowercase or empty");
  }
}

BilingualDictionary parse_dictionary(const std::string& text, const std::string& name) {
  BilingualDictionary dict;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 2)
      throw DataError(name, lineno, "expected source_lemma<TAB>target_lemma");
    const std::string src = trim(fields[0]);
    const std::string tgt = trim(fields[1]);
    if (src.empty() || tgt.empty()) throw DataError(name, lineno, "empty lemma");
    dict.add(src, tgt);
  }
  return dict;
}

BilingualDictionary load_dictionary(const std::string& path) {
  return parse_dictionary(read_file(path), path);
}

const std::vector<Alignment>* AlignmentTable::find(const std::string& source_key) const {
  auto it = entries.find(source_key);
  return it == entries.end() ? nullptr : &it->second;
}

namespace {

// Backtracking bijection search; at most three words per side, so this is
// bounded by 3! candidate pairings.
bool bijection_exists(const std::vector<std::string>& src,
                      const std::vector<std::string>& tgt,
                      const BilingualDictionary& dict, std::vector<bool>& used,
                      std::size_t i) {
  if (i == src.size()) return true;
  for (std::size_t j = 0; j < tgt.size(); ++j) {
    if (used[j] || !dict.translates(src[i], tgt[j])) continue;
    used[j] = true;
    if (bijection_exists(src, tgt, dict, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

void sort_alignments(std::vector<Alignment>& v) {
  std::sort(v.begin(), v.end(), [](const Alignment& a, const Alignment& b) {
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.target_key < b.target_key;
  });
}

}  // namespace

bool can_align(const std::vector<std::string>& src_open,
               const std::vector<std::string>& tgt_open,
               const BilingualDictionary& dict) {
  if (src_open.size() != tgt_open.size()) return false;
  if (src_open.empty()) return false;
  std::vector<bool> used(tgt_open.size(), false);
  return bijection_exists(src_open, tgt_open, dict, used, 0);
}

bool can_align(const Phrase& src, const Phrase& tgt, const BilingualDictionary& dict) {
  return can_align(src.open_class_lemmas, tgt.open_class_lemmas, dict);
}

AlignmentTable align_corpora(const PhraseCounts& src, const PhraseCounts& tgt,
                             const BilingualDictionary& dict) {
  // Index target phrases by their open-class lemmas so each source phrase
  // only inspects candidates sharing a translation of its first open-class
  // word. Results equal the all-pairs definition.
  std::map<std::string, std::vector<const std::pair<const std::string, PhraseEntry>*>>
      by_lemma;
  for (const auto& entry : tgt)
    for (const std::string& lemma : entry.second.open_class_lemmas)
      by_lemma[lemma].push_back(&entry);

  AlignmentTable table;
  for (const auto& [src_key, src_entry] : src) {
    if (src_entry.open_class_lemmas.empty()) continue;
    const std::set<std::string>* first_translations =
        dict.translations(src_entry.open_class_lemmas.front());
    if (first_translations == nullptr) continue;

    std::set<std::string> seen;
    std::vector<Alignment> aligned;
    for (const std::string& t : *first_translations) {
      auto it = by_lemma.find(t);
      if (it == by_lemma.end()) continue;
      for (const auto* tgt_pair : it->second) {
        const auto& [tgt_key, tgt_entry] = *tgt_pair;
        if (!seen.insert(tgt_key).second) continue;
        if (can_align(src_entry.open_class_lemmas, tgt_entry.open_class_lemmas, dict))
          aligned.push_back(
              Alignment{tgt_key, std::min(src_entry.count, tgt_entry.count)});
      }
    }
    if (!aligned.empty()) {
      sort_alignments(aligned);
      table.entries.emplace(src_key, std::move(aligned));
    }
  }
  return table;
}

void validate_table(const AlignmentTable& table, const PhraseCounts& src,
                    const PhraseCounts& tgt, const BilingualDictionary& dict) {
  for (const auto& [src_key, alignments] : table.entries) {
    auto s = src.find(src_key);
    if (s == src.end())
      throw DataError("alignment table references unknown source phrase \"" +
                      src_key + "\"");
    for (const Alignment& a : alignments) {
      auto t = tgt.find(a.target_key);
      if (t == tgt.end())
        throw DataError("alignment table references unknown target phrase \"" +
                        a.target_key + "\"");
      if (a.frequency < 1)
        throw DataError("alignment \"" + src_key + "\" -> \"" + a.target_key +
                        "\" has frequency " + std::to_string(a.frequency));
      if (s->second.open_class_lemmas.size() != t->second.open_class_lemmas.size())
        throw DataError("aligned pair \"" + src_key + "\" / \"" + a.target_key +
                        "\" differs in open-class word count");
      if (!can_align(s->second.open_class_lemmas, t->second.open_class_lemmas, dict))
        throw DataError("aligned pair \"" + src_key + "\" / \"" + a.target_key +
                        "\" fails the translation constraint");
    }
  }
}

std::string alignment_table_tsv(const AlignmentTable& table) {
  std::ostringstream out;
  for (const auto& [src_key, alignments] : table.entries)
    for (const Alignment& a : alignments)
      out << src_key << '\t' << a.target_key << '\t' << a.frequency << '\n';
  return out.str();
}

AlignmentTable parse_alignment_tsv(const std::string& text, const std::string& name) {
  AlignmentTable table;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 3)
      throw DataError(name, lineno, "expected src_key<TAB>tgt_key<TAB>frequency");
    const long freq = parse_long(fields[2], "frequency");
    if (freq < 1) throw DataError(name, lineno, "frequency must be >= 1");
    table.entries[fields[0]].push_back(Alignment{fields[1], freq});
  }
  for (auto& [key, alignments] : table.entries) {
    (void)key;
    sort_alignments(alignments);
  }
  return table;
}

AlignmentTable load_alignment_tsv(const std::string& path) {
  return parse_alignment_tsv(read_file(path), path);
}

}  // namespace npwsd
