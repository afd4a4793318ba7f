#include <doctest.h>

#include <random>

#include "geolang/errors.hpp"
#include "geolang/words.hpp"

using namespace geolang;

namespace {

  std::vector<Word> all_words(std::size_t letters, std::size_t maxlen) {
    std::vector<Word> out{{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].size() < maxlen) {
        for (LetterId x = 0; x < letters; ++x) {
          Word w = out[i];
          w.push_back(x);
          out.push_back(w);
        }
      }
    }
    return out;
  }

  Word random_word(std::mt19937_64& rng, std::size_t letters,
                   std::size_t maxlen) {
    std::uniform_int_distribution<std::size_t> len(0, maxlen);
    std::uniform_int_distribution<LetterId> letter(0, letters - 1);
    Word w(len(rng));
    for (auto& x : w) {
      x = letter(rng);
    }
    return w;
  }

  // u is reachable from w by single deletions.
  bool by_deletions(Word const& u, Word const& w) {
    if (u.size() > w.size()) {
      return false;
    }
    if (u == w) {
      return true;
    }
    for (auto const& d : deletion_neighbors(w)) {
      if (by_deletions(u, d)) {
        return true;
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("parse and format") {
  auto A = alphabet_with_inverses({"a", "b"});
  CHECK(A.size() == 4);
  Word w = parse_word("a b^-1  a^-1", A);
  CHECK(w == Word{0, 3, 1});
  CHECK(format_word(w, A) == "a b^-1 a^-1");
  CHECK(format_word({}, A) == "1");
  CHECK(parse_word("1", A).empty());
  CHECK(parse_word("a^-1^-1", alphabet_with_inverses({"a"})) == Word{0});
  CHECK_THROWS_AS(parse_word("c", A), UnknownLetter);
  CHECK(invert_word(w, A) == parse_word("a b a^-1", A));
}

TEST_CASE("alphabets reject inconsistent pairings") {
  CHECK_THROWS_AS(Alphabet({{"a", "b"}, {"b", "c"}, {"c", "a"}}), InputError);
  CHECK_THROWS_AS(Alphabet({{"a", "a"}, {"a", "a"}}), InputError);
  Alphabet inv({{"s", "s"}, {"x", "X"}, {"X", "x"}});
  CHECK(inv.self_inverse(0));
  CHECK(inv.inverse(1) == 2);
}

TEST_CASE("shortlex order") {
  CHECK(shortlex_less({1}, {0, 0}));
  CHECK(shortlex_less({0, 1}, {1, 0}));
  CHECK_FALSE(shortlex_less({0, 1}, {0, 1}));
}

TEST_CASE("subsequence order axioms") {
  auto words = all_words(4, 3);
  for (auto const& u : words) {
    CHECK(is_subsequence(u, u));
    CHECK(is_subsequence({}, u));
    for (auto const& w : words) {
      if (is_subsequence(u, w)) {
        CHECK(u.size() <= w.size());
        if (u != w) {
          CHECK_FALSE(is_subsequence(w, u));
        }
        for (auto const& v : words) {
          if (is_subsequence(w, v)) {
            CHECK(is_subsequence(u, v));
          }
        }
      }
    }
  }
}

TEST_CASE("subsequence equals deletion chains up to length 6") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    Word w = random_word(rng, 4, 6);
    Word u = random_word(rng, 4, 4);
    CHECK(is_subsequence(u, w) == by_deletions(u, w));
  }
  for (auto const& w : all_words(3, 4)) {
    for (auto const& u : all_words(3, 4)) {
      CHECK(is_subsequence(u, w) == by_deletions(u, w));
    }
  }
}

TEST_CASE("factors and deletion neighbors") {
  CHECK(is_factor({1, 2}, {0, 1, 2}));
  CHECK_FALSE(is_factor({0, 2}, {0, 1, 2}));
  CHECK(deletion_neighbors({0, 0, 1}) == std::vector<Word>{{0, 0}, {0, 1}});
  CHECK(deletion_neighbors({}).empty());
}

TEST_CASE("language strata and membership") {
  auto A = alphabet_with_inverses({"a"});
  Language L(A, 2, true);
  L.insert({});
  L.insert({1});
  L.insert({0});
  CHECK(L.stratum(1) == std::vector<Word>{{0}, {1}});
  CHECK(L.contains({1}));
  CHECK_FALSE(L.contains({0, 0, 0}));
  Language T(A, 1, false);
  CHECK_THROWS_AS((void)T.contains({0, 0}), std::out_of_range);
  CHECK(L.stratum_sizes() == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("minimal forbidden subsequences reconstruct the language") {
  std::mt19937_64 rng(11);
  auto A = alphabet_with_inverses({"a", "b"});
  for (int trial = 0; trial < 40; ++trial) {
    WordSet f;
    for (auto const& w : all_words(4, 4)) {
      if (w.size() == 4) {
        f.insert(w);
      }
    }
    for (int k = 0; k < 6; ++k) {
      Word w = random_word(rng, 4, 3);
      if (!w.empty()) {
        f.insert(w);
      }
    }
    auto L = avoid_language(f, A, 4);
    REQUIRE(L.complete());
    require_deletion_closed(L);
    auto minimal = minimal_forbidden_subsequences(L);
    CHECK(is_antichain(minimal));
    auto back = avoid_language(minimal, A, 5);
    CHECK(back.complete());
    CHECK(back.same_members_up_to(L, 5));
    for (auto const& m : minimal) {
      bool has_member = false;
      for (auto const& g : f) {
        has_member = has_member || is_subsequence(g, m);
      }
      CHECK(has_member);
    }
  }
}

TEST_CASE("deletion closure violations are reported") {
  auto A = alphabet_with_inverses({"a"});
  Language L(A, std::vector<std::vector<Word>>{{{}}, {{0}}, {{0, 1}}}, true);
  CHECK_THROWS_AS(require_deletion_closed(L), NotDownwardClosed);
  CHECK_THROWS_AS(require_factor_closed(L), NotFactorClosed);
}

TEST_CASE("minimal forbidden factors") {
  auto A = alphabet_with_inverses({"a"});
  // Freely reduced words up to length 3.
  std::vector<std::vector<Word>> strata{{{}}, {{0}, {1}}, {{0, 0}, {1, 1}},
                                        {{0, 0, 0}, {1, 1, 1}}};
  Language L(A, strata, false);
  auto f = minimal_forbidden_factors(L);
  CHECK(f == WordSet{{0, 1}, {1, 0}});
}

TEST_CASE("antichains") {
  CHECK(is_antichain({{0, 1}, {1, 0}}));
  CHECK_FALSE(is_antichain({{0}, {1, 0}}));
}
