#pragma once

// Hopf-algebra structure of the quasi-shuffle algebra on integer-indexed
// words: product, deconcatenation coproduct, counit, antipode, convolution.

#include <cstdint>
#include <map>
#include <vector>
#include <unordered_map>

#include "qsh/element.hpp"
#include "qsh/errors.hpp"

namespace qsh {

/// Multiplicities of the words in u ∗ v (quasi-shuffle) or u ⧢ v (shuffle).
/// All coefficients are positive integers, independent of the field.
using WordCounts = std::map<Word, std::int64_t>;
WordCounts quasi_shuffle_counts(const Word& u, const Word& v);
WordCounts shuffle_counts(const Word& u, const Word& v);

template <Field S>
Element<S> from_counts(const WordCounts& counts) {
  Element<S> out;
  for (const auto& [w, n] : counts) out.add(w, S(static_cast<long>(n)));
  return out;
}

template <Field S>
Element<S> quasi_shuffle(const Word& u, const Word& v) {
  return from_counts<S>(quasi_shuffle_counts(u, v));
}

/// Bilinear extension of a word product to elements.
template <Field S, class WordProduct>
Element<S> bilinear(const Element<S>& x, const Element<S>& y, WordProduct&& product) {
  Element<S> out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) {
      const S c = cu * cv;
      for (const auto& [w, n] : product(u, v)) out.add(w, c * S(static_cast<long>(n)));
    }
  return out;
}

template <Field S>
Element<S> quasi_shuffle_elem(const Element<S>& x, const Element<S>& y) {
  return bilinear(x, y, quasi_shuffle_counts);
}

/// Δ(w) = Σ_{uv=w} u ⊗ v.
template <Field S>
TensorElement<S> coproduct(const Word& w) {
  TensorElement<S> out;
  for (std::size_t i = 0; i <= w.size(); ++i) out.add(w.prefix(i), w.suffix_from(i), S(1));
  return out;
}

template <Field S>
TensorElement<S> coproduct(const Element<S>& x) {
  TensorElement<S> out;
  for (const auto& [w, c] : x)
    for (std::size_t i = 0; i <= w.size(); ++i) out.add(w.prefix(i), w.suffix_from(i), c);
  return out;
}

/// Δ̃(w) = Δ(w) − w⊗𝟙 − 𝟙⊗w; the empty word is rejected.
template <Field S>
TensorElement<S> reduced_coproduct(const Word& w) {
  if (w.empty()) throw DomainError("reduced coproduct is undefined on the empty word");
  TensorElement<S> out;
  for (std::size_t i = 1; i < w.size(); ++i) out.add(w.prefix(i), w.suffix_from(i), S(1));
  return out;
}

template <Field S>
S counit(const Element<S>& x) {
  return x.coefficient(Word{});
}

namespace detail {

// Per-thread memo tables keyed by word; one per field and recursion side.
template <Field S, int Side>
std::unordered_map<Word, Element<S>>& antipode_cache() {
  thread_local std::unordered_map<Word, Element<S>> cache;
  return cache;
}

}  // namespace detail

/// S(w) = −w − Σ_{(w)} S(w′) ∗ w″, memoized.
template <Field S>
Element<S> antipode(const Word& w) {
  auto& cache = detail::antipode_cache<S, 0>();
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  Element<S> out;
  if (w.empty()) {
    out = Element<S>::unit();
  } else {
    out.add(w, S(-1));
    for (std::size_t i = 1; i < w.size(); ++i) {
      const Element<S> left = antipode<S>(w.prefix(i));
      out -= quasi_shuffle_elem(left, Element<S>(w.suffix_from(i)));
    }
  }
  cache.emplace(w, out);
  return out;
}

/// S(w) = −w − Σ_{(w)} w′ ∗ S(w″), memoized separately from `antipode`.
template <Field S>
Element<S> antipode_right(const Word& w) {
  auto& cache = detail::antipode_cache<S, 1>();
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  Element<S> out;
  if (w.empty()) {
    out = Element<S>::unit();
  } else {
    out.add(w, S(-1));
    for (std::size_t i = 1; i < w.size(); ++i) {
      const Element<S> right = antipode_right<S>(w.suffix_from(i));
      out -= quasi_shuffle_elem(Element<S>(w.prefix(i)), right);
    }
  }
  cache.emplace(w, out);
  return out;
}

template <Field S>
Element<S> antipode(const Element<S>& x) {
  return x.map_linear([](const Word& w) { return antipode<S>(w); });
}

/// (f⋆g)(x) = m ∘ (f⊗g) ∘ Δ(x) for maps given as callables Word → S.
template <Field S, class F, class G>
S convolve(F&& f, G&& g, const Element<S>& x) {
  S acc(0);
  for (const auto& [w, c] : x)
    for (std::size_t i = 0; i <= w.size(); ++i) acc += c * f(w.prefix(i)) * g(w.suffix_from(i));
  return acc;
}

/// Componentwise product of tensors: (a⊗b)·(c⊗d) = (a∗c)⊗(b∗d).
template <Field S, class WordProduct>
TensorElement<S> tensor_product(const TensorElement<S>& x, const TensorElement<S>& y, WordProduct&& product) {
  TensorElement<S> out;
  for (const auto& [k1, c1] : x)
    for (const auto& [k2, c2] : y) {
      const WordCounts left = product(k1.first, k2.first);
      const WordCounts right = product(k1.second, k2.second);
      const S c = c1 * c2;
      for (const auto& [a, na] : left)
        for (const auto& [b, nb] : right) out.add(a, b, c * S(static_cast<long>(na * nb)));
    }
  return out;
}

/// Iterated reduced coproduct Δ̃^k(w) as a list of (k+1)-fold splittings
/// into nonempty pieces; empty once k ≥ length(w).
std::vector<std::vector<Word>> iterated_reduced_coproduct(const Word& w, std::size_t k);

}  // namespace qsh
