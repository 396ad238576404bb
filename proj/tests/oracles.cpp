#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>

#include "npwsd/util.hpp"

namespace npwsd::oracles {

namespace {

std::size_t pick(std::mt19937& rng, std::size_t n) { return rng() % n; }

char pos_char(PosCategory pos) {
  switch (pos) {
    case PosCategory::noun: return 'N';
    case PosCategory::adjective: return 'J';
    case PosCategory::preposition: return 'P';
    case PosCategory::determiner: return 'D';
    case PosCategory::conjunction: return 'C';
    case PosCategory::verb: return 'V';
    case PosCategory::other: return 'O';
  }
  return 'O';
}

Phrase phrase_from_span(const std::vector<Token>& toks, std::size_t begin,
                        std::size_t end) {
  Phrase p;
  std::vector<std::string> lemmas;
  for (std::size_t i = begin; i < end; ++i) {
    p.tokens.push_back(toks[i]);
    lemmas.push_back(toks[i].lemma);
    if (is_open_class(toks[i].pos)) p.open_class_lemmas.push_back(toks[i].lemma);
  }
  p.key = join(lemmas, " ");
  return p;
}

}  // namespace

std::vector<Phrase> brute_noun_phrases(const Sentence& sentence) {
  const std::vector<Token>& toks = sentence.tokens;
  std::string tags;
  for (const Token& t : toks) tags += pos_char(t.pos);

  static const std::regex pattern("[NJ][NJPDC]*[NJ]");
  struct Span {
    std::size_t begin, end;  // end exclusive
  };
  std::vector<Span> spans;
  for (std::size_t b = 0; b < toks.size(); ++b)
    for (std::size_t e = b + 2; e <= toks.size(); ++e)
      if (std::regex_match(tags.substr(b, e - b), pattern)) spans.push_back({b, e});

  std::vector<Phrase> out;
  std::size_t cursor = 0;
  for (;;) {
    const Span* best = nullptr;
    for (const Span& s : spans) {
      if (s.begin < cursor) continue;
      if (best == nullptr || s.begin < best->begin ||
          (s.begin == best->begin && s.end > best->end))
        best = &s;
    }
    if (best == nullptr) break;
    std::size_t open = 0;
    for (std::size_t i = best->begin; i < best->end; ++i)
      if (tags[i] == 'N' || tags[i] == 'J') ++open;
    if (open >= 2 && open <= 3) out.push_back(phrase_from_span(toks, best->begin, best->end));
    cursor = best->end;
  }
  return out;
}

bool brute_can_align(const std::vector<std::string>& src_open,
                     const std::vector<std::string>& tgt_open,
                     const BilingualDictionary& dict) {
  if (src_open.size() != tgt_open.size() || src_open.empty()) return false;
  std::vector<std::size_t> perm(tgt_open.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < src_open.size() && ok; ++i)
      ok = dict.translates(src_open[i], tgt_open[perm[i]]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

AlignmentTable brute_align(const PhraseCounts& src, const PhraseCounts& tgt,
                           const BilingualDictionary& dict) {
  AlignmentTable table;
  for (const auto& [src_key, src_entry] : src) {
    std::vector<Alignment> aligned;
    for (const auto& [tgt_key, tgt_entry] : tgt)
      if (brute_can_align(src_entry.open_class_lemmas, tgt_entry.open_class_lemmas, dict))
        aligned.push_back(Alignment{tgt_key, std::min(src_entry.count, tgt_entry.count)});
    if (!aligned.empty()) {
      std::sort(aligned.begin(), aligned.end(), [](const Alignment& a, const Alignment& b) {
        if (a.frequency != b.frequency) return a.frequency > b.frequency;
        return a.target_key < b.target_key;
      });
      table.entries.emplace(src_key, std::move(aligned));
    }
  }
  return table;
}

std::vector<Match> brute_match(std::span<const Token> tokens,
                               const std::vector<std::string>& phrase_keys) {
  std::vector<std::vector<std::string>> phrases;
  std::set<std::string> seen;
  for (const std::string& key : phrase_keys)
    if (seen.insert(key).second) phrases.push_back(split_ws(key));

  std::vector<Match> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::vector<std::string>* best = nullptr;
    for (const auto& p : phrases) {
      if (i + p.size() > tokens.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < p.size() && ok; ++k)
        ok = tokens[i + k].lemma == p[k];
      if (ok && (best == nullptr || p.size() > best->size())) best = &p;
    }
    if (best != nullptr) {
      out.push_back(Match{i, i + best->size(), join(*best, " ")});
      i += best->size();
    } else {
      ++i;
    }
  }
  return out;
}

FilterResult brute_filter(const std::string& target, const std::string& phrase_key,
                          const AlignmentTable& table, const SenseInventory& tgt_inv,
                          const MappingChain& chain, const SenseInventory& src_inv,
                          long threshold) {
  FilterResult result;
  result.target = target;
  auto entry = table.entries.find(phrase_key);
  if (entry == table.entries.end()) return result;

  for (const Alignment& a : entry->second) {
    if (a.frequency < threshold) continue;
    result.covered = true;
    std::set<std::string> supported;
    for (const std::string& word : split_ws(a.target_key)) {
      for (const auto& [synset_id, lemmas] : tgt_inv.synsets) {
        if (lemmas.count(word) == 0) continue;
        std::string mapped = synset_id;
        bool alive = true;
        for (const SynsetMapping& hop : chain) {
          auto it = hop.pairs.find(mapped);
          if (it == hop.pairs.end()) {
            alive = false;
            break;
          }
          mapped = it->second;
        }
        if (!alive) continue;
        auto synset = src_inv.synsets.find(mapped);
        if (synset == src_inv.synsets.end() || synset->second.count(target) == 0)
          continue;
        result.admissible[mapped] += a.frequency;
        supported.insert(mapped);
      }
    }
    if (const std::vector<std::string>* order = src_inv.senses_of(target))
      for (const std::string& sense : *order)
        if (supported.count(sense) > 0)
          result.support.push_back(SenseSupport{sense, a.frequency});
  }
  return result;
}

namespace {

const XmlElement* find_attr(const XmlElement& e, const std::string& name,
                            std::string* out) {
  auto it = e.attrs.find(name);
  if (it == e.attrs.end()) return nullptr;
  *out = it->second;
  return &e;
}

void recount(const XmlElement& element, EvalReport& report, long threshold,
             std::size_t* words_with_gold, std::size_t* total_words) {
  if (element.name == "wf") {
    *total_words += 1;
    std::string cmd, pos, lemma, wnsn, lexsn, phrase, alignments, freqs;
    find_attr(element, "cmd", &cmd);
    find_attr(element, "pos", &pos);
    find_attr(element, "lemma", &lemma);
    find_attr(element, "wnsn", &wnsn);
    find_attr(element, "lexsn", &lexsn);
    if (!wnsn.empty()) *words_with_gold += 1;

    const bool noun_tag = to_lower_ascii(pos).starts_with("nn");
    const bool amenable = cmd == "done" && noun_tag && !lemma.empty() && !wnsn.empty();
    if (amenable) {
      report.amenable_words += 1;
      if (find_attr(element, "phrase", &phrase) != nullptr) {
        report.phrase_words += 1;
        bool covered = false;
        if (find_attr(element, "alignment_freqs", &freqs) != nullptr)
          for (const std::string& f : split_ws(freqs))
            if (std::stol(f) >= threshold) covered = true;
        if (covered) {
          report.covered_words += 1;
          const std::string gold = lemma + "%" + lexsn;
          bool retained = false;
          if (find_attr(element, "alignments", &alignments) != nullptr)
            for (const std::string& pair : split_ws(alignments)) {
              const std::size_t cut = pair.rfind(':');
              if (pair.substr(0, cut) == gold && std::stol(pair.substr(cut + 1)) >= threshold)
                retained = true;
            }
          if (retained) report.retained_words += 1;
        }
      }
    }
  }
  for (const XmlNode& child : element.children)
    if (const auto* e = std::get_if<XmlElement>(&child))
      recount(*e, report, threshold, words_with_gold, total_words);
}

}  // namespace

EvalReport brute_evaluate(const XmlDocument& doc, long threshold) {
  EvalReport report;
  std::size_t words_with_gold = 0;
  std::size_t total_words = 0;
  recount(doc.root, report, threshold, &words_with_gold, &total_words);
  return report;
}

// --- generators ---------------------------------------------------------

namespace {

const std::vector<std::string> kVocab = {
    "alpha", "bravo", "cielo", "delta", "echo",  "forro", "golfo",
    "hotel", "india", "julia", "kilo",  "lima",  "mango", "norte"};

PosCategory random_pos(std::mt19937& rng) {
  // weighted toward pattern-relevant categories
  static const PosCategory table[] = {
      PosCategory::noun,        PosCategory::noun,       PosCategory::noun,
      PosCategory::adjective,   PosCategory::adjective,  PosCategory::preposition,
      PosCategory::determiner,  PosCategory::conjunction, PosCategory::verb,
      PosCategory::other};
  return table[pick(rng, std::size(table))];
}

}  // namespace

Token random_token(std::mt19937& rng) {
  const std::string lemma = kVocab[pick(rng, kVocab.size())];
  std::string surface = lemma;
  if (pick(rng, 4) == 0) surface[0] = static_cast<char>(std::toupper(surface[0]));
  if (pick(rng, 5) == 0) surface += "s";
  return Token{surface, lemma, random_pos(rng)};
}

Sentence random_sentence(std::mt19937& rng, std::size_t max_tokens) {
  Sentence s;
  const std::size_t n = pick(rng, max_tokens + 1);
  for (std::size_t i = 0; i < n; ++i) s.tokens.push_back(random_token(rng));
  return s;
}

RandomAlignerInput random_aligner_input(std::mt19937& rng, std::size_t max_phrases) {
  RandomAlignerInput input;
  const std::size_t src_n = 1 + pick(rng, max_phrases);
  const std::size_t tgt_n = 1 + pick(rng, max_phrases);
  auto random_entry = [&rng](std::size_t salt) {
    PhraseEntry entry;
    const std::size_t open = 2 + pick(rng, 2);
    std::vector<std::string> lemmas;
    for (std::size_t i = 0; i < open; ++i)
      lemmas.push_back(kVocab[pick(rng, kVocab.size())]);
    entry.open_class_lemmas = lemmas;
    entry.count = 1 + static_cast<long>(pick(rng, 9));
    return std::pair<std::string, PhraseEntry>(join(lemmas, " ") + " k" +
                                                   std::to_string(salt),
                                               entry);
  };
  for (std::size_t i = 0; i < src_n; ++i) input.src.insert(random_entry(i));
  for (std::size_t i = 0; i < tgt_n; ++i) input.tgt.insert(random_entry(i));
  const std::size_t pairs = pick(rng, 40);
  for (std::size_t i = 0; i < pairs; ++i)
    input.dict.add(kVocab[pick(rng, kVocab.size())], kVocab[pick(rng, kVocab.size())]);
  return input;
}

RandomMatcherInput random_matcher_input(std::mt19937& rng, std::size_t max_phrases,
                                        std::size_t max_tokens) {
  RandomMatcherInput input;
  const std::size_t phrases = 1 + pick(rng, max_phrases);
  for (std::size_t i = 0; i < phrases; ++i) {
    const std::size_t len = 2 + pick(rng, 4);
    std::vector<std::string> lemmas;
    for (std::size_t k = 0; k < len; ++k)
      lemmas.push_back(kVocab[pick(rng, 6)]);  // small alphabet: overlaps likely
    input.phrase_keys.push_back(join(lemmas, " "));
  }
  const std::size_t n = pick(rng, max_tokens + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string lemma = kVocab[pick(rng, 6)];
    input.tokens.push_back(Token{lemma, lemma, PosCategory::noun});
  }
  return input;
}

SenseInventory random_inventory(std::mt19937& rng, const std::string& language,
                                std::size_t lemmas, std::size_t max_senses) {
  SenseInventory inv;
  inv.language = language;
  std::size_t next_id = 0;
  for (std::size_t i = 0; i < lemmas; ++i) {
    const std::string lemma = kVocab[pick(rng, kVocab.size())] + "_" + language;
    if (inv.senses.count(lemma) > 0) continue;
    const std::size_t senses = 1 + pick(rng, max_senses);
    for (std::size_t k = 0; k < senses; ++k) {
      const std::string id =
          lemma + "%" + std::to_string(next_id++) + ":" + std::to_string(k) + "::";
      inv.synsets[id].insert(lemma);
      if (pick(rng, 3) == 0)
        inv.synsets[id].insert(kVocab[pick(rng, kVocab.size())] + "_" + language);
      for (const std::string& member : inv.synsets[id])
        if (std::find(inv.senses[member].begin(), inv.senses[member].end(), id) ==
            inv.senses[member].end())
          inv.senses[member].push_back(id);
    }
  }
  return inv;
}

}  // namespace npwsd::oracles
