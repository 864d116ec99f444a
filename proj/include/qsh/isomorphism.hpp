#pragma once

// The shuffle Hopf algebra, Hoffman's exponential and logarithm relating it to
// the quasi-shuffle algebra, and the low-depth pieces of the quotient
// W = Lie(Y)/π₁(N).

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsh/coideal.hpp"
#include "qsh/element.hpp"
#include "qsh/eulerian.hpp"
#include "qsh/hopf.hpp"
#include "qsh/linalg.hpp"
#include "qsh/window.hpp"

namespace qsh {

template <Field S>
Element<S> shuffle(const Word& u, const Word& v) {
  return from_counts<S>(shuffle_counts(u, v));
}

template <Field S>
Element<S> shuffle_elem(const Element<S>& x, const Element<S>& y) {
  return bilinear(x, y, shuffle_counts);
}

/// log_H(w) = Σ_{I ⊨ n} ((−1)^{n−l}/(i1⋯il)) I[w].
template <Field S>
Element<S> hoffman_log(const Word& w) {
  Element<S> out;
  for (const Composition& c : compositions(w.size())) {
    long denom = 1;
    for (std::size_t p : c.parts()) denom *= static_cast<long>(p);
    const long sign = (w.size() - c.size()) % 2 == 0 ? 1 : -1;
    out.add(contract_along(w, c), S(Rational(sign, denom)));
  }
  return out;
}

/// exp_H(w) = Σ_{I ⊨ n} (1/(i1!⋯il!)) I[w].
template <Field S>
Element<S> hoffman_exp(const Word& w) {
  Element<S> out;
  for (const Composition& c : compositions(w.size())) {
    Rational coeff = 1;
    for (std::size_t p : c.parts()) coeff /= factorial(static_cast<unsigned>(p));
    out.add(contract_along(w, c), S(coeff));
  }
  return out;
}

template <Field S>
Element<S> hoffman_log(const Element<S>& x) {
  return x.map_linear([](const Word& w) { return hoffman_log<S>(w); });
}

template <Field S>
Element<S> hoffman_exp(const Element<S>& x) {
  return x.map_linear([](const Word& w) { return hoffman_exp<S>(w); });
}

/// A failed instance of the Hoffman morphism checks.
struct HoffmanFailure {
  Word u;
  Word v;  // empty for the inversion check
  std::string what;
};

/// log_H(u∗v) = log_H(u) ⧢ log_H(v) for nonempty window words with
/// |u| + |v| ≤ max_len, and exp_H∘log_H = id on window words. The maps are
/// total, so contracted letters may leave the letter range.
std::optional<HoffmanFailure> hoffman_morphism_counterexample(const Window& window);
inline bool check_hoffman_morphism(const Window& window) { return !hoffman_morphism_counterexample(window); }

/// Every word of hoffman_log(w) and hoffman_exp(w) is non-singular for each
/// non-singular window word w. Returns the first offending word.
std::optional<Word> log_preserves_n_counterexample(const Window& window);
inline bool log_preserves_n(const Window& window) { return !log_preserves_n_counterexample(window); }

/// Σ c_{k,l} [z_k, z_l] with k > l.
template <Field S>
class LieElement2 {
 public:
  using Pair = std::pair<Letter, Letter>;

  LieElement2& add(Letter k, Letter l, const S& c) {
    if (k == l || c.is_zero()) return *this;
    const Pair key = k > l ? Pair{k, l} : Pair{l, k};
    const S signed_c = k > l ? c : -c;
    auto [it, inserted] = terms_.try_emplace(key, signed_c);
    if (!inserted) {
      it->second += signed_c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  /// Reads an antisymmetric depth-2 element of the shuffle algebra as a
  /// combination of brackets; throws DomainError if it is not antisymmetric.
  static LieElement2 from_depth2(const Element<S>& x) {
    LieElement2 out;
    for (const auto& [w, c] : x) {
      if (w.size() != 2) throw DomainError("not a depth-2 element: contains " + w.str());
      const Word swapped{w[1], w[0]};
      if (w[0] == w[1] || x.coefficient(swapped) != -c) throw DomainError("depth-2 element is not a Lie element");
      if (w[0] > w[1]) out.add(w[0], w[1], c);
    }
    return out;
  }

  const std::map<Pair, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  S coefficient(Letter k, Letter l) const {
    auto it = terms_.find(k > l ? Pair{k, l} : Pair{l, k});
    if (it == terms_.end()) return S(0);
    return k > l ? it->second : -it->second;
  }
  friend bool operator==(const LieElement2&, const LieElement2&) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
      const bool neg = c.sign() < 0;
      const S mag = neg ? -c : c;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (mag != S(1)) out += mag.str() + "*";
      out += "[z_" + std::to_string(p.first) + ",z_" + std::to_string(p.second) + "]";
      first = false;
    }
    return out;
  }

 private:
  std::map<Pair, S> terms_;
};

/// π₁ of the shuffle algebra on a length-2 word, as a bracket.
template <Field S>
LieElement2<S> pi1_shuffle_depth2(const Word& w) {
  if (w.size() != 2) throw DomainError("pi1_shuffle_depth2 needs a word of length 2, got " + w.str());
  return LieElement2<S>::from_depth2(eulerian_pi1_shuffle<S>(w));
}

/// Dimension of a graded piece of W on a window, with representatives:
/// letters [k] at depth 1, brackets [z_k, z_l] encoded as [k, l] (k > l) at
/// depth 2.
struct WDimension {
  int depth = 0;
  std::size_t dimension = 0;
  std::vector<Word> basis;
  /// Number of spanning generators of the ambient piece of Lie(Y).
  std::size_t ambient = 0;
};

WDimension w_dimension(int depth, const Window& window);

/// {[z_k, z_l] : k > l, z_k z_l singular} on the window letters, encoded as [k, l].
std::vector<Word> w2_candidate_basis(const Window& window);

struct W2Diff {
  std::vector<Word> common;
  /// In the literal candidate set but zero in the computed quotient.
  std::vector<Word> candidate_only;
  std::vector<Word> computed_only;
};

W2Diff w2_diff(const Window& window);

}  // namespace qsh
