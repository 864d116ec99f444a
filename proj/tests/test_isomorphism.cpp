#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "qsh/isomorphism.hpp"

using namespace qsh;
using E = Element<Rational>;
using L = LieElement2<Rational>;

TEST_CASE("shuffle examples") {
  CHECK(shuffle<Rational>(Word{3}, Word{8}) == E(Word{3, 8}) + E(Word{8, 3}));
  CHECK(shuffle<Rational>(Word{}, Word{4, 1}) == E(Word{4, 1}));
  CHECK(shuffle<Rational>(Word{1}, Word{2, 3}) == E(Word{1, 2, 3}) + E(Word{2, 1, 3}) + E(Word{2, 3, 1}));
}

TEST_CASE("shuffle term counts are binomial") {
  for (const Word& u : Window(-1, 1, 3).enumerate())
    for (const Word& v : Window(-1, 1, 3).enumerate()) {
      Rational total = 0;
      for (const auto& [w, c] : shuffle<Rational>(u, v)) total += c;
      REQUIRE(total == binomial(static_cast<unsigned>(u.size() + v.size()), static_cast<unsigned>(u.size())));
    }
}

TEST_CASE("Hoffman maps on short words") {
  CHECK(hoffman_log<Rational>(Word{5}) == E(Word{5}));
  CHECK(hoffman_exp<Rational>(Word{5}) == E(Word{5}));
  CHECK(hoffman_log<Rational>(Word{2, 7}) == E(Word{2, 7}) - Rational(1, 2) * E(Word{9}));
  CHECK(hoffman_exp<Rational>(Word{2, 7}) == E(Word{2, 7}) + Rational(1, 2) * E(Word{9}));
  CHECK(hoffman_exp(hoffman_log<Rational>(Word{1, 2, 3})) == E(Word{1, 2, 3}));
  CHECK(hoffman_log(hoffman_exp<Rational>(Word{1, 2, 3, 4})) == E(Word{1, 2, 3, 4}));
}

TEST_CASE("Hoffman logarithm intertwines the two products") {
  CHECK(check_hoffman_morphism(Window(-2, 2, 3)));
  const E lhs = hoffman_log(quasi_shuffle<Rational>(Word{1}, Word{1}));
  const E rhs = shuffle_elem(hoffman_log<Rational>(Word{1}), hoffman_log<Rational>(Word{1}));
  CHECK(lhs == rhs);
  CHECK(lhs == Rational(2) * E(Word{1, 1}));
  CHECK(hoffman_log(quasi_shuffle<Rational>(Word{}, Word{3})) == shuffle_elem(E::unit(), hoffman_log<Rational>(Word{3})));
}

TEST_CASE("Hoffman maps preserve the coideal") {
  CHECK(log_preserves_n(Window(-3, 3, 3)));
  const E lg = hoffman_log<Rational>(Word{-1, -2});
  std::set<Word> support;
  for (const auto& [w, c] : lg) support.insert(w);
  CHECK(support == std::set<Word>{Word{-1, -2}, Word{-3}});
  for (Letter k = -4; k <= 4; ++k)
    if (k != 1) CHECK(hoffman_log<Rational>(Word{k}) == E(Word{k}));
}

TEST_CASE("Lie elements of depth two") {
  CHECK(pi1_shuffle_depth2<Rational>(Word{3, 1}) == L().add(3, 1, Rational(1, 2)));
  CHECK(pi1_shuffle_depth2<Rational>(Word{1, 3}) == L().add(3, 1, Rational(-1, 2)));
  CHECK(pi1_shuffle_depth2<Rational>(Word{1, 3}).str() == "-1/2*[z_3,z_1]");
  CHECK(pi1_shuffle_depth2<Rational>(Word{2, 2}).is_zero());
  CHECK(L().add(1, 3, Rational(2)).coefficient(3, 1) == Rational(-2));
  CHECK_THROWS_AS(pi1_shuffle_depth2<Rational>(Word{1}), DomainError);
  CHECK_THROWS_AS(L::from_depth2(E(Word{1, 2})), DomainError);
}

TEST_CASE("shuffle Eulerian idempotent kills products at depth two") {
  for (Letter a = -2; a <= 2; ++a)
    for (Letter b = -2; b <= 2; ++b) CHECK(eulerian_pi1_shuffle(shuffle<Rational>(Word{a}, Word{b})).is_zero());
}

TEST_CASE("depth one of the quotient") {
  for (Letter k = 1; k <= 4; ++k) {
    const auto d = w_dimension(1, Window(-k, k, 2));
    CHECK(d.dimension == 1);
    CHECK(d.basis == std::vector<Word>{Word{1}});
  }
  CHECK(w_dimension(1, Window(-3, 0, 2, Alphabet::nonpositive)).dimension == 0);
  CHECK_THROWS_AS(w_dimension(3, Window(-1, 1, 3)), DomainError);
}

TEST_CASE("depth two of the quotient matches the pair count") {
  std::size_t previous = 0;
  for (Letter k = 1; k <= 5; ++k) {
    const auto d = w_dimension(2, Window(-k, k, 2));
    CHECK(d.dimension == oracle::w2_predicate_count(-k, k));
    CHECK(d.basis.size() == d.dimension);
    CHECK(d.dimension >= previous);
    previous = d.dimension;
  }
  const auto three = w_dimension(2, Window(-3, 3, 2)).basis;
  CHECK(std::find(three.begin(), three.end(), Word{1, 0}) != three.end());
  CHECK(std::find(three.begin(), three.end(), Word{1, -2}) == three.end());
}

TEST_CASE("literal candidate basis versus the computed quotient") {
  CHECK(w2_candidate_basis(Window(0, 1, 2)) == std::vector<Word>{Word{1, 0}});
  const auto diff = w2_diff(Window(-2, 1, 2));
  CHECK(std::find(diff.candidate_only.begin(), diff.candidate_only.end(), Word{1, -2}) != diff.candidate_only.end());
  CHECK(diff.computed_only.empty());
  // Pair sums −3 and −5 are odd, so neither order is singular.
  CHECK(w2_candidate_basis(Window(-3, -2, 2, Alphabet::negative)).empty());
  CHECK(w_dimension(2, Window(-3, -2, 2, Alphabet::negative)).dimension == 0);
}
