#include "qsh/hopf.hpp"

namespace qsh {

namespace {

void add_prefixed(WordCounts& out, Letter a, const WordCounts& in) {
  for (const auto& [w, n] : in) out[w.prepended(a)] += n;
}

// Dynamic program over suffix pairs (u[i:], v[j:]); `contract` adds the
// z_{m+n} term of the quasi-shuffle recursion.
WordCounts interleave(const Word& u, const Word& v, bool contract) {
  const std::size_t n = u.size();
  const std::size_t m = v.size();
  std::vector<std::vector<WordCounts>> table(n + 1, std::vector<WordCounts>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) table[i][m][u.suffix_from(i)] = 1;
  for (std::size_t j = 0; j <= m; ++j) table[n][j][v.suffix_from(j)] = 1;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      WordCounts& cell = table[i][j];
      add_prefixed(cell, u[i], table[i + 1][j]);
      add_prefixed(cell, v[j], table[i][j + 1]);
      if (contract) add_prefixed(cell, u[i] + v[j], table[i + 1][j + 1]);
    }
  }
  return std::move(table[0][0]);
}

void splittings(const Word& w, std::size_t start, std::size_t pieces, std::vector<Word>& current,
                std::vector<std::vector<Word>>& out) {
  if (pieces == 1) {
    if (start < w.size()) {
      current.push_back(w.suffix_from(start));
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  for (std::size_t end = start + 1; end + pieces - 1 <= w.size(); ++end) {
    current.push_back(w.suffix_from(start).prefix(end - start));
    splittings(w, end, pieces - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

WordCounts quasi_shuffle_counts(const Word& u, const Word& v) { return interleave(u, v, true); }

WordCounts shuffle_counts(const Word& u, const Word& v) { return interleave(u, v, false); }

std::vector<std::vector<Word>> iterated_reduced_coproduct(const Word& w, std::size_t k) {
  std::vector<std::vector<Word>> out;
  if (w.empty()) throw DomainError("reduced coproduct is undefined on the empty word");
  std::vector<Word> current;
  splittings(w, 0, k + 1, current, out);
  return out;
}

}  // namespace qsh
