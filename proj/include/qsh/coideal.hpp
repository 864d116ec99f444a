#pragma once

// Non-singular words, block contractions, the coideal N they span, and
// window-relative membership in the ideal generated by N.

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qsh/element.hpp"
#include "qsh/errors.hpp"
#include "qsh/hopf.hpp"
#include "qsh/linalg.hpp"
#include "qsh/window.hpp"

namespace qsh {

/// True iff s lies in {2, 1, 0, -2, -4, ...}, the excluded values for k1+k2.
constexpr bool in_depth_two_singular_set(Letter s) { return s == 2 || s == 1 || s == 0 || (s < 0 && s % 2 == 0); }

/// 0 when w is non-singular, otherwise the number (1, 2 or 3) of the first
/// partial-sum condition it violates. Rejects the empty word.
int violated_condition(const Word& w);

inline bool is_non_singular(const Word& w) { return violated_condition(w) == 0; }

/// Words obtained by replacing exactly one block of ≥ 2 consecutive letters
/// by its sum. Requires length ≥ 2.
std::set<Word> contractions_one_block(const Word& w);

/// Ordered sequence of positive parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<std::size_t> parts);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  std::size_t total() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<std::size_t> parts_;
};

/// All compositions of n in lexicographic order of their parts;
/// compositions(0) holds only the empty composition.
std::vector<Composition> compositions(std::size_t n);

/// I[w]: the j-th letter is the sum of the j-th block of w. Throws
/// CompositionMismatch unless the parts sum to length(w).
Word contract_along(const Word& w, const Composition& c);

/// Reduced row-echelon basis of a subspace, with its ambient window.
template <Field S>
struct SpanBasis {
  Window window;
  Echelon<Word, S> echelon;

  std::size_t dimension() const { return echelon.rank(); }
  std::vector<Element<S>> rows() const {
    std::vector<Element<S>> out;
    for (const auto& [pivot, row] : echelon.rows()) {
      Element<S> e;
      for (const auto& [w, c] : row.vec) e.add(w, c);
      out.push_back(std::move(e));
    }
    return out;
  }
  std::vector<Word> pivots() const {
    std::vector<Word> out;
    for (const auto& [pivot, row] : echelon.rows()) out.push_back(pivot);
    return out;
  }
};

/// Non-singular nonempty words of the window, canonical order.
std::vector<Word> non_singular_words(const Window& window);

template <Field S = Rational>
SpanBasis<S> n_basis(const Window& window) {
  SpanBasis<S> basis{window, {}};
  for (const Word& w : non_singular_words(window)) basis.echelon.insert({{w, S(1)}});
  return basis;
}

/// One spanning element n ∗ m of the ideal (n non-singular, m any word).
struct IdealGenerator {
  Word non_singular;
  Word multiplier;
};

template <Field S>
struct MembershipResult {
  bool member = false;
  /// x = Σ c · (n ∗ m) over these generators when member is true.
  std::vector<std::pair<IdealGenerator, S>> certificate;
};

/// Generators n ∗ m of the ideal whose whole support lies in the window.
/// Products leaving the window are dropped rather than truncated, so the
/// span is exactly the part of the ideal realised by in-window products.
std::vector<IdealGenerator> ideal_generators(const Window& window);

template <Field S>
MembershipResult<S> ideal_membership(const Element<S>& x, const Window& window) {
  for (const auto& [w, c] : x)
    if (!window.contains(w)) throw OutOfWindow(w.str(), "ideal membership input");

  const std::vector<IdealGenerator> gens = ideal_generators(window);
  Echelon<Word, S> span;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    SparseVector<Word, S> v;
    for (const auto& [w, n] : quasi_shuffle_counts(gens[i].non_singular, gens[i].multiplier))
      v.emplace(w, S(static_cast<long>(n)));
    span.insert(v, S(0), i);
  }
  SparseVector<Word, S> target(x.terms().begin(), x.terms().end());
  auto red = span.reduce(target);
  MembershipResult<S> out;
  out.member = red.remainder.empty();
  if (out.member)
    for (const auto& [g, c] : red.combo) out.certificate.emplace_back(gens[g], c);
  return out;
}

/// First non-singular window word with a singular proper prefix, if any.
std::optional<Word> prefix_closure_counterexample(const Window& window);
inline bool prefix_closure_check(const Window& window) { return !prefix_closure_counterexample(window); }

/// First (word, contraction) pair with the word non-singular and the
/// contraction singular, if any. All compositions are tried.
std::optional<std::pair<Word, Word>> contraction_closure_counterexample(const Window& window);
inline bool contraction_closure_check(const Window& window) { return !contraction_closure_counterexample(window); }

}  // namespace qsh
