#include "qsh/isomorphism.hpp"

#include <algorithm>
#include <set>

namespace qsh {

std::optional<HoffmanFailure> hoffman_morphism_counterexample(const Window& window) {
  using Q = Rational;
  const std::vector<Word> words = window.enumerate();
  for (const Word& w : words)
    if (hoffman_exp(hoffman_log<Q>(w)) != Element<Q>(w)) return HoffmanFailure{w, {}, "exp_H(log_H(w)) != w"};
  for (std::size_t i = 1; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      const Word& u = words[i];
      const Word& v = words[j];
      if (u.size() + v.size() > window.max_len()) continue;
      const Element<Q> lhs = hoffman_log(quasi_shuffle<Q>(u, v));
      const Element<Q> rhs = shuffle_elem(hoffman_log<Q>(u), hoffman_log<Q>(v));
      if (lhs != rhs) return HoffmanFailure{u, v, "log_H(u*v) != log_H(u) sh log_H(v)"};
    }
  }
  return std::nullopt;
}

std::optional<Word> log_preserves_n_counterexample(const Window& window) {
  using Q = Rational;
  for (const Word& w : non_singular_words(window)) {
    for (const auto& [u, c] : hoffman_log<Q>(w))
      if (!is_non_singular(u)) return w;
    for (const auto& [u, c] : hoffman_exp<Q>(w))
      if (!is_non_singular(u)) return w;
  }
  return std::nullopt;
}

WDimension w_dimension(int depth, const Window& window) {
  using Q = Rational;
  WDimension out;
  out.depth = depth;
  const std::vector<Letter> letters = window.letters();
  if (depth == 1) {
    // π₁ fixes letters, so W₁ = span{letters} / span{non-singular letters}.
    out.ambient = letters.size();
    for (Letter k : letters)
      if (!is_non_singular(Word{k})) out.basis.push_back(Word{k});
    out.dimension = out.basis.size();
    return out;
  }
  if (depth != 2) throw DomainError("w_dimension supports depth 1 or 2");
  if (window.max_len() < 2) throw DomainError("depth-2 computations need max_len >= 2");

  // Columns: brackets [z_k, z_l], k > l, keyed as the word [k, l].
  Echelon<Word, Q> relations;
  for (const Word& w : window.words_of_length(2)) {
    if (!is_non_singular(w)) continue;
    // Work in the shuffle picture: π₁ of log_H(w), restricted to depth 2.
    const Element<Q> image = eulerian_pi1_shuffle(hoffman_log<Q>(w)).component(2);
    const LieElement2<Q> bracket = LieElement2<Q>::from_depth2(image);
    SparseVector<Word, Q> row;
    for (const auto& [pair, c] : bracket.terms()) row.emplace(Word{pair.first, pair.second}, c);
    relations.insert(row);
  }
  for (Letter k : letters)
    for (Letter l : letters) {
      if (k <= l) continue;
      ++out.ambient;
      if (!relations.is_pivot(Word{k, l})) out.basis.push_back(Word{k, l});
    }
  out.dimension = out.ambient - relations.rank();
  return out;
}

std::vector<Word> w2_candidate_basis(const Window& window) {
  std::vector<Word> out;
  const std::vector<Letter> letters = window.letters();
  for (Letter k : letters)
    for (Letter l : letters)
      if (k > l && !is_non_singular(Word{k, l})) out.push_back(Word{k, l});
  std::sort(out.begin(), out.end());
  return out;
}

W2Diff w2_diff(const Window& window) {
  std::vector<Word> candidates = w2_candidate_basis(window);
  std::vector<Word> computed = w_dimension(2, window).basis;
  std::sort(computed.begin(), computed.end());
  W2Diff out;
  std::set_intersection(candidates.begin(), candidates.end(), computed.begin(), computed.end(), std::back_inserter(out.common));
  std::set_difference(candidates.begin(), candidates.end(), computed.begin(), computed.end(), std::back_inserter(out.candidate_only));
  std::set_difference(computed.begin(), computed.end(), candidates.begin(), candidates.end(),
                      std::back_inserter(out.computed_only));
  return out;
}

}  // namespace qsh
