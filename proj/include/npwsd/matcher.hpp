#ifndef NPWSD_MATCHER_HPP
#define NPWSD_MATCHER_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "npwsd/corpus.hpp"

namespace npwsd {

// A forest of tries keyed by lemma. Each tree holds every stored phrase
// beginning with its root lemma; accepting nodes mark phrase ends and may
// still have children when a longer phrase shares the prefix.
struct ForestNode {
  std::string label;
  bool accepting = false;
  std::string phrase_key;  // set iff accepting
  std::map<std::string, ForestNode> children;
};

struct PhraseForest {
  std::map<std::string, ForestNode> roots;
  std::size_t phrase_count = 0;
  std::size_t max_phrase_len = 0;  // in lemmas
};

// Keys are split on spaces; a key with fewer than two lemmas is malformed.
PhraseForest build_forest(const std::vector<std::string>& phrase_keys);

void validate_forest(const PhraseForest& forest);
// All root-to-accepting-node paths, i.e. exactly the stored phrases.
std::vector<std::string> forest_phrases(const PhraseForest& forest);

struct Match {
  std::size_t start = 0;  // token offset, inclusive
  std::size_t end = 0;    // exclusive
  std::string phrase_key;
};

struct MatchStats {
  std::size_t node_visits = 0;
};

// Left-to-right longest-match scan over lemmas. When a traversal passes an
// acceptance node and then dies deeper in the tree, the match ends at the
// last acceptance node and the unused tokens are rescanned. After a match
// the scan resumes on the following token; after a failed attempt it
// resumes one token past the attempt's start.
std::vector<Match> match_text(std::span<const Token> tokens,
                              const PhraseForest& forest,
                              MatchStats* stats = nullptr);

void validate_matches(const std::vector<Match>& matches,
                      std::span<const Token> tokens, const PhraseForest& forest);

}  // namespace npwsd

#endif
