#include "npwsd/sense_filter.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "npwsd/errors.hpp"
#include "npwsd/util.hpp"

namespace npwsd {

const std::vector<std::string>* SenseInventory::senses_of(const std::string& lemma) const {
  auto it = senses.find(lemma);
  return it == senses.end() ? nullptr : &it->second;
}

bool SenseInventory::is_sense_of(const std::string& synset_id,
                                 const std::string& lemma) const {
  auto it = synsets.find(synset_id);
  return it != synsets.end() && it->second.count(lemma) > 0;
}

void validate_inventory(const SenseInventory& inv) {
  for (const auto& [id, lemmas] : inv.synsets) {
    if (id.empty()) throw DataError("inventory synset with empty id");
    if (lemmas.empty()) throw DataError("synset \"" + id + "\" has no lemmas");
    for (const std::string& lemma : lemmas) {
      if (lemma.empty() || lemma != to_lower_ascii(lemma))
        throw DataError("synset \"" + id + "\" lemma \"" + lemma +
                        "\" not lowercase or empty");
      const std::vector<std::string>* s = inv.senses_of(lemma);
      if (s == nullptr || std::find(s->begin(), s->end(), id) == s->end())
        throw DataError("lemma \"" + lemma + "\" missing sense entry for \"" + id + "\"");
    }
  }
  for (const auto& [lemma, ids] : inv.senses) {
    std::set<std::string> seen;
    for (const std::string& id : ids) {
      if (!seen.insert(id).second)
        throw DataError("lemma \"" + lemma + "\" lists sense \"" + id + "\" twice");
      if (!inv.is_sense_of(id, lemma))
        throw DataError("lemma \"" + lemma + "\" claims sense \"" + id +
                        "\" but the synset does not contain it");
    }
  }
}

namespace {

// "art%1:04:00::" -> key "1:04:00::" for lemma "art"
void derive_sense_key(SenseInventory& inv, const std::string& id) {
  const std::size_t cut = id.find('%');
  if (cut == std::string::npos || cut == 0 || cut + 1 >= id.size()) return;
  inv.sense_keys[id] = id.substr(cut + 1);
}

}  // namespace

SenseInventory parse_inventory(const std::string& text, const std::string& name,
                               const std::string& language, std::ostream* diag) {
  std::ostream& warn = diag ? *diag : std::cerr;
  SenseInventory inv;
  inv.language = language;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 2)
      throw DataError(name, lineno, "expected synset_id<TAB>lemma1,lemma2,...");
    const std::string id = trim(fields[0]);
    if (id.empty()) throw DataError(name, lineno, "empty synset id");
    if (inv.synsets.count(id) > 0)
      warn << name << ":" << lineno << ": warning: synset \"" << id
           << "\" repeated, merging lemmas\n";
    for (const std::string& raw : split(fields[1], ',')) {
      const std::string lemma = to_lower_ascii(trim(raw));
      if (lemma.empty()) throw DataError(name, lineno, "empty lemma in synset \"" + id + "\"");
      if (inv.synsets[id].insert(lemma).second) inv.senses[lemma].push_back(id);
    }
    if (inv.synsets[id].empty()) throw DataError(name, lineno, "synset \"" + id + "\" has no lemmas");
    derive_sense_key(inv, id);
  }
  return inv;
}

SenseInventory load_inventory(const std::string& path, const std::string& language,
                              std::ostream* diag) {
  return parse_inventory(read_file(path), path, language, diag);
}

void apply_sense_index(SenseInventory& inv, const std::string& text,
                       const std::string& name) {
  std::map<std::string, std::map<long, std::string>> order;  // lemma -> number -> id
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 3)
      throw DataError(name, lineno, "expected lemma<TAB>synset_id<TAB>sense_number");
    const std::string lemma = to_lower_ascii(trim(fields[0]));
    const std::string id = trim(fields[1]);
    const long number = parse_long(fields[2], "sense_number");
    if (number < 1) throw DataError(name, lineno, "sense_number must be >= 1");
    if (!inv.is_sense_of(id, lemma))
      throw DataError(name, lineno,
                      "index entry \"" + lemma + "\" / \"" + id + "\" not in inventory");
    if (!order[lemma].emplace(number, id).second)
      throw DataError(name, lineno, "duplicate sense_number for lemma \"" + lemma + "\"");
  }
  for (const auto& [lemma, numbered] : order) {
    std::vector<std::string>& ids = inv.senses[lemma];
    if (numbered.size() != ids.size())
      throw DataError(name + ": index for lemma \"" + lemma + "\" covers " +
                      std::to_string(numbered.size()) + " of " +
                      std::to_string(ids.size()) + " senses");
    std::vector<std::string> reordered;
    long expect = 1;
    for (const auto& [number, id] : numbered) {
      if (number != expect)
        throw DataError(name + ": lemma \"" + lemma + "\" sense numbers not contiguous");
      ++expect;
      reordered.push_back(id);
    }
    std::vector<std::string> sorted_old = ids;
    std::vector<std::string> sorted_new = reordered;
    std::sort(sorted_old.begin(), sorted_old.end());
    std::sort(sorted_new.begin(), sorted_new.end());
    if (sorted_old != sorted_new)
      throw DataError(name + ": index for lemma \"" + lemma +
                      "\" does not cover its senses exactly");
    ids = std::move(reordered);
  }
}

void load_sense_index(SenseInventory& inv, const std::string& path) {
  apply_sense_index(inv, read_file(path), path);
}

SynsetMapping parse_mapping(const std::string& text, const std::string& name,
                            std::ostream* diag) {
  std::ostream& warn = diag ? *diag : std::cerr;
  SynsetMapping mapping;
  mapping.name = name;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 2)
      throw DataError(name, lineno, "expected from_synset<TAB>to_synset");
    const std::string from = trim(fields[0]);
    const std::string to = trim(fields[1]);
    if (from.empty() || to.empty()) throw DataError(name, lineno, "empty synset id");
    auto it = mapping.pairs.find(from);
    if (it != mapping.pairs.end() && it->second != to)
      warn << name << ":" << lineno << ": warning: \"" << from
           << "\" remapped, last entry wins\n";
    mapping.pairs[from] = to;
  }
  return mapping;
}

SynsetMapping load_mapping(const std::string& path, std::ostream* diag) {
  return parse_mapping(read_file(path), path, diag);
}

std::string mapping_tsv(const SynsetMapping& mapping) {
  std::ostringstream out;
  for (const auto& [from, to] : mapping.pairs) out << from << '\t' << to << '\n';
  return out.str();
}

SynsetMapping invert_mapping(const SynsetMapping& mapping, std::ostream* diag) {
  std::ostream& warn = diag ? *diag : std::cerr;
  SynsetMapping inv;
  inv.name = mapping.name + " (inverted)";
  for (const auto& [from, to] : mapping.pairs) {
    auto it = inv.pairs.find(to);
    if (it != inv.pairs.end())
      warn << "warning: \"" << to << "\" has several preimages, keeping \""
           << it->second << "\"\n";
    else
      inv.pairs.emplace(to, from);
  }
  return inv;
}

std::optional<std::string> map_synset(const std::string& synset_id,
                                      const MappingChain& chain) {
  std::string current = synset_id;
  for (const SynsetMapping& mapping : chain) {
    auto it = mapping.pairs.find(current);
    if (it == mapping.pairs.end()) return std::nullopt;
    current = it->second;
  }
  return current;
}

void validate_filter_result(const FilterResult& r, const SenseInventory& src_inv) {
  const std::vector<std::string>* senses = src_inv.senses_of(r.target);
  for (const auto& [id, freq] : r.admissible) {
    if (freq < 1)
      throw DataError("admissible sense \"" + id + "\" has frequency " +
                      std::to_string(freq));
    if (senses == nullptr || std::find(senses->begin(), senses->end(), id) == senses->end())
      throw DataError("admissible sense \"" + id + "\" is not a sense of \"" +
                      r.target + "\"");
  }
  for (const SenseSupport& s : r.support) {
    if (s.frequency < 1) throw DataError("support entry with frequency < 1");
    if (r.admissible.count(s.sense_id) == 0)
      throw DataError("support entry for \"" + s.sense_id + "\" missing from admissible");
  }
  if (!r.admissible.empty() && !r.covered)
    throw DataError("admissible senses found for an uncovered word");
}

FilterResult filter_senses(const std::string& target, const std::string& phrase_key,
                           const AlignmentTable& table, const SenseInventory& tgt_inv,
                           const MappingChain& chain, const SenseInventory& src_inv,
                           long threshold) {
  FilterResult result;
  result.target = target;
  const std::vector<Alignment>* alignments = table.find(phrase_key);
  if (alignments == nullptr) return result;

  const std::vector<std::string>* target_senses = src_inv.senses_of(target);
  for (const Alignment& a : *alignments) {
    if (a.frequency < threshold) continue;
    result.covered = true;
    if (target_senses == nullptr) continue;
    std::set<std::string> supported_here;
    for (const std::string& word : split_ws(a.target_key)) {
      const std::vector<std::string>* word_senses = tgt_inv.senses_of(word);
      if (word_senses == nullptr) continue;  // function words have no synsets
      for (const std::string& synset : *word_senses) {
        const std::optional<std::string> mapped = map_synset(synset, chain);
        if (!mapped) continue;
        if (!src_inv.is_sense_of(*mapped, target)) continue;
        result.admissible[*mapped] += a.frequency;
        supported_here.insert(*mapped);
      }
    }
    // one support entry per (alignment, sense), in the target's sense order
    for (const std::string& sense : *target_senses)
      if (supported_here.count(sense) > 0)
        result.support.push_back(SenseSupport{sense, a.frequency});
  }
  return result;
}

}  // namespace npwsd
