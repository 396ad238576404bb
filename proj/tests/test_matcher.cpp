#include <doctest.h>

#include <random>

#include "npwsd/errors.hpp"
#include "npwsd/matcher.hpp"
#include "oracles.hpp"

using namespace npwsd;

namespace {

std::vector<Token> lemma_tokens(std::initializer_list<std::string> lemmas) {
  std::vector<Token> tokens;
  for (const std::string& l : lemmas) tokens.push_back(Token{l, l, PosCategory::noun});
  return tokens;
}

bool matches_equal(const std::vector<Match>& a, const std::vector<Match>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].start != b[i].start || a[i].end != b[i].end ||
        a[i].phrase_key != b[i].phrase_key)
      return false;
  return true;
}

}  // namespace

TEST_CASE("build_forest stores phrases as root-to-acceptance paths") {
  const PhraseForest forest = build_forest({"number of voters"});
  REQUIRE(forest.roots.count("number") == 1);
  const ForestNode& root = forest.roots.at("number");
  REQUIRE(root.children.count("of") == 1);
  const ForestNode& of = root.children.at("of");
  REQUIRE(of.children.count("voters") == 1);
  CHECK(of.children.at("voters").accepting);
  CHECK(of.children.at("voters").phrase_key == "number of voters");
  CHECK(!of.accepting);
  validate_forest(forest);

  CHECK(build_forest({}).roots.empty());

  // a shared prefix keeps the shorter phrase's acceptance node
  const PhraseForest shared = build_forest({"a b", "a b c"});
  REQUIRE(shared.roots.size() == 1);
  const ForestNode& b = shared.roots.at("a").children.at("b");
  CHECK(b.accepting);
  CHECK(b.children.at("c").accepting);
  CHECK(forest_phrases(shared) == std::vector<std::string>{"a b", "a b c"});

  CHECK_THROWS_AS(build_forest({"single"}), DataError);
}

TEST_CASE("match_text finds stored phrases by lemma") {
  const PhraseForest forest = build_forest({"number of voter"});
  const auto m = match_text(lemma_tokens({"number", "of", "voter"}), forest);
  REQUIRE(m.size() == 1);
  CHECK(m[0].start == 0);
  CHECK(m[0].end == 3);
  CHECK(m[0].phrase_key == "number of voter");

  CHECK(match_text(lemma_tokens({"number", "of"}), forest).empty());
}

TEST_CASE("longer phrases are preferred over shorter ones") {
  const PhraseForest forest = build_forest({"a b", "a b c"});
  const auto m = match_text(lemma_tokens({"a", "b", "c"}), forest);
  REQUIRE(m.size() == 1);
  CHECK(m[0].end == 3);
  CHECK(m[0].phrase_key == "a b c");
}

TEST_CASE("overrun past an acceptance node backs up and restores input") {
  const PhraseForest forest = build_forest({"a b", "a b c d"});
  // traversal reaches "c" but dies at "x": the match ends at "a b" and the
  // scan resumes on "c"
  const auto m = match_text(lemma_tokens({"a", "b", "c", "x"}), forest);
  REQUIRE(m.size() == 1);
  CHECK(m[0].phrase_key == "a b");
  CHECK(m[0].end == 2);
}

TEST_CASE("a failed attempt resumes one token after its start") {
  const PhraseForest forest = build_forest({"a b"});
  const auto m = match_text(lemma_tokens({"a", "a", "b"}), forest);
  REQUIRE(m.size() == 1);
  CHECK(m[0].start == 1);
  CHECK(m[0].end == 3);
}

TEST_CASE("matched tokens are consumed, matches never overlap") {
  const PhraseForest forest = build_forest({"a b", "b c"});
  const auto m = match_text(lemma_tokens({"a", "b", "c"}), forest);
  REQUIRE(m.size() == 1);
  CHECK(m[0].phrase_key == "a b");
}

TEST_CASE("matching is on lemmas, so inflected surfaces still match") {
  Lexicon lex;
  lex.add("numbers", "number", PosCategory::noun);
  lex.add("of", "of", PosCategory::preposition);
  lex.add("voters", "voter", PosCategory::noun);
  std::vector<Token> tokens;
  for (const char* s : {"Numbers", "of", "voters"})
    tokens.push_back(analyze(s, lex));
  const PhraseForest forest = build_forest({"number of voter"});
  const auto m = match_text(tokens, forest);
  REQUIRE(m.size() == 1);
  CHECK(m[0].phrase_key == "number of voter");
}

TEST_CASE("matcher equals the naive scanner on random inputs") {
  std::mt19937 rng(43);
  for (int round = 0; round < 400; ++round) {
    const auto input = oracles::random_matcher_input(rng, 12, 60);
    const PhraseForest forest = build_forest(input.phrase_keys);
    const auto got = match_text(input.tokens, forest);
    const auto want = oracles::brute_match(input.tokens, input.phrase_keys);
    CHECK(matches_equal(got, want));
    validate_matches(got, input.tokens, forest);
  }
}

TEST_CASE("node visits stay within tokens times max phrase length") {
  std::mt19937 rng(47);
  for (int round = 0; round < 100; ++round) {
    const auto input = oracles::random_matcher_input(rng, 10, 120);
    const PhraseForest forest = build_forest(input.phrase_keys);
    MatchStats stats;
    match_text(input.tokens, forest, &stats);
    CHECK(stats.node_visits <= input.tokens.size() * forest.max_phrase_len);
  }
}
