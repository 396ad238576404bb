#include "npwsd/matcher.hpp"

#include "npwsd/errors.hpp"
#include "npwsd/util.hpp"

namespace npwsd {

PhraseForest build_forest(const std::vector<std::string>& phrase_keys) {
  PhraseForest forest;
  for (const std::string& key : phrase_keys) {
    const std::vector<std::string> lemmas = split_ws(key);
    if (lemmas.size() < 2)
      throw DataError("malformed phrase \"" + key + "\": needs at least two lemmas");
    ForestNode* node = &forest.roots[lemmas[0]];
    if (node->label.empty()) node->label = lemmas[0];
    for (std::size_t i = 1; i < lemmas.size(); ++i) {
      node = &node->children[lemmas[i]];
      if (node->label.empty()) node->label = lemmas[i];
    }
    if (!node->accepting) {
      node->accepting = true;
      node->phrase_key = join(lemmas, " ");
      forest.phrase_count += 1;
    }
    forest.max_phrase_len = std::max(forest.max_phrase_len, lemmas.size());
  }
  return forest;
}

namespace {

void collect_phrases(const ForestNode& node, std::vector<std::string>& path,
                     std::vector<std::string>& out) {
  path.push_back(node.label);
  if (node.accepting) {
    if (node.phrase_key != join(path, " "))
      throw DataError("forest node path does not spell its phrase key \"" +
                      node.phrase_key + "\"");
    out.push_back(node.phrase_key);
  } else if (!node.phrase_key.empty()) {
    throw DataError("non-accepting forest node carries phrase key \"" +
                    node.phrase_key + "\"");
  }
  for (const auto& [label, child] : node.children) {
    if (label != child.label) throw DataError("forest child label out of sync");
    collect_phrases(child, path, out);
  }
  path.pop_back();
}

}  // namespace

std::vector<std::string> forest_phrases(const PhraseForest& forest) {
  std::vector<std::string> out;
  std::vector<std::string> path;
  for (const auto& [label, root] : forest.roots) {
    if (label != root.label) throw DataError("forest root label out of sync");
    if (root.accepting)
      throw DataError("root node \"" + label + "\" is accepting: one-lemma phrase");
    collect_phrases(root, path, out);
  }
  return out;
}

void validate_forest(const PhraseForest& forest) {
  const std::vector<std::string> phrases = forest_phrases(forest);
  if (phrases.size() != forest.phrase_count)
    throw DataError("forest phrase_count " + std::to_string(forest.phrase_count) +
                    " but " + std::to_string(phrases.size()) + " accepting paths");
  for (const std::string& key : phrases)
    if (split_ws(key).size() > forest.max_phrase_len)
      throw DataError("forest max_phrase_len below stored phrase \"" + key + "\"");
}

std::vector<Match> match_text(std::span<const Token> tokens,
                              const PhraseForest& forest, MatchStats* stats) {
  std::vector<Match> matches;
  std::size_t visits = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    auto root = forest.roots.find(tokens[i].lemma);
    if (root == forest.roots.end()) {
      ++i;
      continue;
    }
    ++visits;
    const ForestNode* node = &root->second;
    const ForestNode* last_accept = nullptr;
    std::size_t last_accept_end = i;
    if (node->accepting) {  // cannot happen for well-formed forests
      last_accept = node;
      last_accept_end = i + 1;
    }
    std::size_t j = i + 1;
    while (j < tokens.size()) {
      auto child = node->children.find(tokens[j].lemma);
      if (child == node->children.end()) break;
      ++visits;
      node = &child->second;
      ++j;
      if (node->accepting) {
        last_accept = node;
        last_accept_end = j;
      }
    }
    if (last_accept != nullptr) {
      matches.push_back(Match{i, last_accept_end, last_accept->phrase_key});
      i = last_accept_end;  // matched tokens are consumed
    } else {
      ++i;  // nothing accepted: retry from the next token
    }
  }
  if (stats != nullptr) stats->node_visits = visits;
  return matches;
}

void validate_matches(const std::vector<Match>& matches,
                      std::span<const Token> tokens, const PhraseForest& forest) {
  std::size_t prev_end = 0;
  for (std::size_t k = 0; k < matches.size(); ++k) {
    const Match& m = matches[k];
    if (m.end <= m.start || m.end - m.start < 2)
      throw DataError("match shorter than two tokens");
    if (m.end > tokens.size()) throw DataError("match past end of input");
    if (k > 0 && m.start < prev_end) throw DataError("overlapping matches");
    prev_end = m.end;
    std::vector<std::string> lemmas;
    for (std::size_t t = m.start; t < m.end; ++t) lemmas.push_back(tokens[t].lemma);
    if (join(lemmas, " ") != m.phrase_key)
      throw DataError("match span does not spell \"" + m.phrase_key + "\"");
  }
  // every reported key must be a stored phrase
  const std::vector<std::string> stored = forest_phrases(forest);
  for (const Match& m : matches) {
    bool found = false;
    for (const std::string& key : stored)
      if (key == m.phrase_key) {
        found = true;
        break;
      }
    if (!found) throw DataError("match reports unknown phrase \"" + m.phrase_key + "\"");
  }
}

}  // namespace npwsd
