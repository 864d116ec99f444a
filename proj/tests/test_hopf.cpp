#include "doctest.h"

#include "oracles.hpp"
#include "qsh/hopf.hpp"
#include "qsh/ratfun.hpp"
#include "qsh/window.hpp"

using namespace qsh;
using E = Element<Rational>;
using T = TensorElement<Rational>;

namespace {

E from_terms(const oracle::Terms& t) {
  E out;
  for (const auto& [w, c] : t) out.add(w, c);
  return out;
}

E sum_of(std::initializer_list<Word> words) {
  E out;
  for (const Word& w : words) out.add(w, Rational(1));
  return out;
}

std::vector<Word> words_up_to(Letter lo, Letter hi, std::size_t len) { return Window(lo, hi, len).enumerate(); }

// m∘(f⊗g)∘Δ(w) with f, g word maps returning elements.
template <class F, class G>
E convolve_maps(F&& f, G&& g, const Word& w) {
  E out;
  for (const auto& [k, c] : coproduct<Rational>(w)) out += c * quasi_shuffle_elem(f(k.first), g(k.second));
  return out;
}

}  // namespace

TEST_CASE("quasi-shuffle examples") {
  CHECK(quasi_shuffle<Rational>(Word{-1}, Word{-3}) == sum_of({{-1, -3}, {-3, -1}, {-4}}));
  CHECK(quasi_shuffle<Rational>(Word{}, Word{5, 2}) == E(Word{5, 2}));
  CHECK(quasi_shuffle<Rational>(Word{5, 2}, Word{}) == E(Word{5, 2}));
  CHECK(quasi_shuffle<Rational>(Word{1}, Word{2, 3}) == sum_of({{1, 2, 3}, {2, 1, 3}, {2, 3, 1}, {2, 4}, {3, 3}}));
  // Repeated letters give multiplicities.
  CHECK(quasi_shuffle<Rational>(Word{1}, Word{1}) == 2 * E(Word{1, 1}) + E(Word{2}));
}

TEST_CASE("dynamic program agrees with the literal recursion") {
  const auto words = words_up_to(-2, 2, 3);
  for (const Word& u : words)
    for (const Word& v : words) {
      REQUIRE(quasi_shuffle<Rational>(u, v) == from_terms(oracle::recursive_product(u, v, true)));
      REQUIRE(from_counts<Rational>(shuffle_counts(u, v)) == from_terms(oracle::recursive_product(u, v, false)));
    }
}

TEST_CASE("quasi-shuffle is commutative and associative") {
  const auto words = words_up_to(-3, 3, 2);
  for (const Word& u : words)
    for (const Word& v : words) {
      const E uv = quasi_shuffle<Rational>(u, v);
      REQUIRE(uv == quasi_shuffle<Rational>(v, u));
    }
  const auto small = words_up_to(-1, 1, 2);
  for (const Word& u : small)
    for (const Word& v : small)
      for (const Word& w : small) {
        const E left = quasi_shuffle_elem(quasi_shuffle<Rational>(u, v), E(w));
        const E right = quasi_shuffle_elem(E(u), quasi_shuffle<Rational>(v, w));
        REQUIRE(left == right);
      }
}

TEST_CASE("nested sums turn the product into multiplication") {
  std::map<std::pair<Word, long>, Rational> memo;
  auto s = [&](const Word& w, long m) {
    auto key = std::make_pair(w, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    return memo.emplace(key, oracle::truncated_nested_sum(w, m)).first->second;
  };
  const auto words = words_up_to(-2, 2, 2);
  for (const Word& u : words)
    for (const Word& v : words)
      for (long m = 1; m <= 4; ++m) {
        Rational rhs = 0;
        for (const auto& [w, c] : quasi_shuffle<Rational>(u, v)) rhs += c * s(w, m);
        REQUIRE(s(u, m) * s(v, m) == rhs);
      }
}

TEST_CASE("coproduct and counit") {
  T single;
  single.add(Word{7}, Word{}, Rational(1)).add(Word{}, Word{7}, Rational(1));
  CHECK(coproduct<Rational>(Word{7}) == single);

  const T two = coproduct<Rational>(Word{4, 9});
  CHECK(two.size() == 3);
  CHECK(two.coefficient(Word{4, 9}, Word{}) == Rational(1));
  CHECK(two.coefficient(Word{4}, Word{9}) == Rational(1));
  CHECK(two.coefficient(Word{}, Word{4, 9}) == Rational(1));

  T unit;
  unit.add(Word{}, Word{}, Rational(1));
  CHECK(coproduct<Rational>(Word{}) == unit);

  CHECK(reduced_coproduct<Rational>(Word{3}).is_zero());
  T ab;
  ab.add(Word{4}, Word{9}, Rational(1));
  CHECK(reduced_coproduct<Rational>(Word{4, 9}) == ab);
  T abc;
  abc.add(Word{1}, Word{2, 3}, Rational(1)).add(Word{1, 2}, Word{3}, Rational(1));
  CHECK(reduced_coproduct<Rational>(Word{1, 2, 3}) == abc);
  CHECK_THROWS_AS(reduced_coproduct<Rational>(Word{}), DomainError);

  CHECK(counit(E::unit()) == Rational(1));
  CHECK(counit(E(Word{3, 1})) == Rational(0));
  CHECK(counit(Rational(5) * E::unit() + Rational(2) * E(Word{2})) == Rational(5));
}

TEST_CASE("coassociativity on words up to length 4") {
  for (const Word& w : words_up_to(-1, 1, 4)) {
    // Both sides as triples (a, b, c) with abc = w.
    std::map<std::tuple<Word, Word, Word>, Rational> left, right;
    for (const auto& [k, c] : coproduct<Rational>(w)) {
      for (const auto& [k2, c2] : coproduct<Rational>(k.first)) left[{k2.first, k2.second, k.second}] += c * c2;
      for (const auto& [k2, c2] : coproduct<Rational>(k.second)) right[{k.first, k2.first, k2.second}] += c * c2;
    }
    REQUIRE(left == right);
  }
}

TEST_CASE("coproduct is multiplicative") {
  const auto words = words_up_to(-1, 1, 2);
  for (const Word& u : words)
    for (const Word& v : words) {
      const T lhs = coproduct(quasi_shuffle<Rational>(u, v));
      const T rhs = tensor_product(coproduct<Rational>(u), coproduct<Rational>(v), quasi_shuffle_counts);
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("antipode examples and closed form") {
  CHECK(antipode<Rational>(Word{}) == E::unit());
  CHECK(antipode<Rational>(Word{6}) == -E(Word{6}));
  CHECK(antipode<Rational>(Word{2, 5}) == sum_of({{5, 2}, {7}}));
  CHECK(antipode_right<Rational>(Word{2, 5}) == sum_of({{5, 2}, {7}}));
  CHECK(antipode_right<Rational>(Word{}) == E::unit());
  for (const Word& w : words_up_to(-2, 2, 4)) {
    const E s = antipode<Rational>(w);
    REQUIRE(s == from_terms(oracle::antipode_closed_form(w)));
    REQUIRE(s == antipode_right<Rational>(w));
  }
}

TEST_CASE("antipode axiom") {
  auto id = [](const Word& w) { return E(w); };
  auto s = [](const Word& w) { return antipode<Rational>(w); };
  for (const Word& w : words_up_to(-1, 2, 4)) {
    const E expected = w.empty() ? E::unit() : E();
    REQUIRE(convolve_maps(s, id, w) == expected);
    REQUIRE(convolve_maps(id, s, w) == expected);
  }
}

TEST_CASE("antipode over rational functions") {
  using F = RationalFunction;
  CHECK(antipode<F>(Word{2, 5}).coefficient(Word{7}) == F(1));
  CHECK(antipode<F>(Word{1, 2, 3}).size() == antipode<Rational>(Word{1, 2, 3}).size());
}

TEST_CASE("convolve on word functions") {
  auto e = [](const Word& w) { return w.empty() ? Rational(1) : Rational(0); };
  auto one = [](const Word&) { return Rational(1); };
  CHECK(convolve(e, e, E(Word{3, 4})) == Rational(0));
  CHECK(convolve(e, e, E::unit()) == Rational(1));
  CHECK(convolve(one, one, E(Word{3, 4})) == Rational(3));
}

TEST_CASE("conilpotence of the reduced coproduct") {
  for (const Word& w : words_up_to(-1, 1, 4)) {
    if (w.empty()) continue;
    for (std::size_t n = w.size(); n <= w.size() + 1; ++n) REQUIRE(iterated_reduced_coproduct(w, n).empty());
    REQUIRE(iterated_reduced_coproduct(w, w.size() - 1).size() == 1);
  }
}

TEST_CASE("canonical form after cancellation") {
  const E x = quasi_shuffle<Rational>(Word{1}, Word{-2});
  CHECK((x - x).is_zero());
  CHECK((x + (-x)).terms().empty());
  CHECK((Rational(0) * x).is_zero());
}
