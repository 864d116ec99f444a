#pragma once

// The Eulerian idempotent log⋆(Id) of a commutative connected Hopf algebra
// with deconcatenation coproduct, parametrised by the word product.

#include <unordered_map>

#include "qsh/coideal.hpp"
#include "qsh/element.hpp"
#include "qsh/hopf.hpp"

namespace qsh {

/// π₁(w) = Σ_{k≥1} ((−1)^{k+1}/k) Σ_{w = u1⋯uk, ui ≠ 𝟙} u1 · u2 ⋯ uk.
template <Field S, class WordProduct>
Element<S> eulerian_projection(const Word& w, WordProduct&& product) {
  Element<S> out;
  if (w.empty()) return out;
  for (const Composition& c : compositions(w.size())) {
    const long k = static_cast<long>(c.size());
    const S coeff = S(Rational(k % 2 == 1 ? 1 : -1, k));
    Element<S> acc = Element<S>::unit();
    std::size_t pos = 0;
    for (std::size_t part : c.parts()) {
      acc = bilinear(acc, Element<S>(w.suffix_from(pos).prefix(part)), product);
      pos += part;
    }
    acc *= coeff;
    out += acc;
  }
  return out;
}

namespace detail {

template <Field S, int Tag>
std::unordered_map<Word, Element<S>>& eulerian_cache() {
  thread_local std::unordered_map<Word, Element<S>> cache;
  return cache;
}

}  // namespace detail

/// Eulerian idempotent of the quasi-shuffle algebra, memoized per thread.
template <Field S>
const Element<S>& eulerian_pi1(const Word& w) {
  auto& cache = detail::eulerian_cache<S, 0>();
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  return cache.emplace(w, eulerian_projection<S>(w, quasi_shuffle_counts)).first->second;
}

template <Field S>
Element<S> eulerian_pi1(const Element<S>& x) {
  return x.map_linear([](const Word& w) { return eulerian_pi1<S>(w); });
}

/// Eulerian idempotent of the shuffle algebra, memoized per thread.
template <Field S>
const Element<S>& eulerian_pi1_shuffle(const Word& w) {
  auto& cache = detail::eulerian_cache<S, 1>();
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  return cache.emplace(w, eulerian_projection<S>(w, shuffle_counts)).first->second;
}

template <Field S>
Element<S> eulerian_pi1_shuffle(const Element<S>& x) {
  return x.map_linear([](const Word& w) { return eulerian_pi1_shuffle<S>(w); });
}

}  // namespace qsh
