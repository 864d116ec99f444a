#include "qsh/coideal.hpp"

#include <numeric>

namespace qsh {

int violated_condition(const Word& w) {
  if (w.empty()) throw DomainError("the empty word is not classified as singular or non-singular");
  Letter partial = 0;
  for (std::size_t j = 1; j <= w.size(); ++j) {
    partial += w[j - 1];
    if (j == 1 && partial == 1) return 1;
    if (j == 2 && in_depth_two_singular_set(partial)) return 2;
    if (j >= 3 && partial <= static_cast<Letter>(j)) return 3;
  }
  return 0;
}

std::set<Word> contractions_one_block(const Word& w) {
  if (w.size() < 2) throw DomainError("contraction needs a word of length at least 2, got " + w.str());
  std::set<Word> out;
  const auto letters = w.letters();
  for (std::size_t start = 0; start + 1 < w.size(); ++start) {
    for (std::size_t end = start + 2; end <= w.size(); ++end) {
      std::vector<Letter> v(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(start));
      v.push_back(std::accumulate(letters.begin() + static_cast<std::ptrdiff_t>(start),
                                  letters.begin() + static_cast<std::ptrdiff_t>(end), Letter{0}));
      v.insert(v.end(), letters.begin() + static_cast<std::ptrdiff_t>(end), letters.end());
      out.insert(Word(std::move(v)));
    }
  }
  return out;
}

Composition::Composition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t p : parts_)
    if (p == 0) throw DomainError("composition parts must be positive");
}

std::size_t Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

namespace {

void compositions_into(std::size_t remaining, std::vector<std::size_t>& current, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t first = 1; first <= remaining; ++first) {
    current.push_back(first);
    compositions_into(remaining - first, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions(std::size_t n) {
  std::vector<Composition> out;
  std::vector<std::size_t> current;
  compositions_into(n, current, out);
  return out;
}

Word contract_along(const Word& w, const Composition& c) {
  if (c.total() != w.size())
    throw CompositionMismatch("composition of " + std::to_string(c.total()) + " does not match word length " +
                              std::to_string(w.size()));
  std::vector<Letter> out;
  out.reserve(c.size());
  std::size_t pos = 0;
  for (std::size_t part : c.parts()) {
    Letter s = 0;
    for (std::size_t i = 0; i < part; ++i) s += w[pos++];
    out.push_back(s);
  }
  return Word(std::move(out));
}

std::vector<Word> non_singular_words(const Window& window) {
  std::vector<Word> out;
  for (Word& w : window.enumerate())
    if (!w.empty() && is_non_singular(w)) out.push_back(std::move(w));
  return out;
}

std::vector<IdealGenerator> ideal_generators(const Window& window) {
  std::vector<IdealGenerator> out;
  const std::vector<Word> words = window.enumerate();
  for (const Word& n : non_singular_words(window)) {
    for (const Word& m : words) {
      if (n.size() + m.size() > window.max_len()) continue;
      const WordCounts product = quasi_shuffle_counts(n, m);
      bool inside = true;
      for (const auto& [w, k] : product) inside = inside && window.contains(w);
      if (inside) out.push_back({n, m});
    }
  }
  return out;
}

std::optional<Word> prefix_closure_counterexample(const Window& window) {
  for (const Word& w : non_singular_words(window))
    for (std::size_t i = 1; i < w.size(); ++i)
      if (!is_non_singular(w.prefix(i))) return w;
  return std::nullopt;
}

std::optional<std::pair<Word, Word>> contraction_closure_counterexample(const Window& window) {
  for (const Word& w : non_singular_words(window))
    for (const Composition& c : compositions(w.size())) {
      Word contracted = contract_along(w, c);
      if (!is_non_singular(contracted)) return std::pair{w, contracted};
    }
  return std::nullopt;
}

}  // namespace qsh
