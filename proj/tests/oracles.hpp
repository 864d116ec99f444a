#pragma once

// Independent reference computations used by the tests. None of these call
// into the library code path they are used to check.

#include <map>
#include <set>
#include <vector>

#include "qsh/rational.hpp"
#include "qsh/word.hpp"

namespace qsh::oracle {

/// Word → coefficient, built by the literal recursion of the product.
using Terms = std::map<Word, Rational>;

inline void add(Terms& t, const Word& w, const Rational& c) {
  auto& x = t[w];
  x += c;
  if (x.is_zero()) t.erase(w);
}

/// z_m u ∗ z_n v = z_m(u ∗ z_n v) + z_n(z_m u ∗ v) [+ z_{m+n}(u ∗ v)], recursively.
inline Terms recursive_product(const Word& a, const Word& b, bool contract) {
  if (a.empty()) return {{b, Rational(1)}};
  if (b.empty()) return {{a, Rational(1)}};
  Terms out;
  const Word u = a.suffix_from(1);
  const Word v = b.suffix_from(1);
  for (const auto& [w, c] : recursive_product(u, b, contract)) add(out, w.prepended(a[0]), c);
  for (const auto& [w, c] : recursive_product(a, v, contract)) add(out, w.prepended(b[0]), c);
  if (contract)
    for (const auto& [w, c] : recursive_product(u, v, contract)) add(out, w.prepended(a[0] + b[0]), c);
  return out;
}

/// Truncated nested sum S_M(z_{k1}⋯z_{kn}) = Σ_{M ≥ m1 > ⋯ > mn ≥ 1} Π m_i^{−k_i}.
inline Rational truncated_nested_sum(const Word& w, long M) {
  // Direct enumeration of strictly decreasing index tuples.
  Rational total = 0;
  std::vector<long> idx(w.size());
  auto rec = [&](auto&& self, std::size_t depth, long upper, Rational acc) -> void {
    if (depth == w.size()) {
      total += acc;
      return;
    }
    for (long m = upper; m >= 1; --m) self(self, depth + 1, m - 1, acc * pow(Rational(m), -w[depth]));
  };
  rec(rec, 0, M, Rational(1));
  return total;
}

/// Closed form S(z_{k1}⋯z_{kn}) = (−1)^n Σ over contractions of the reversed word.
inline Terms antipode_closed_form(const Word& w) {
  Terms out;
  const Word r = w.reversed();
  const std::size_t n = r.size();
  if (n == 0) return {{Word{}, Rational(1)}};
  const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
  // Each subset of the n−1 gaps decides where blocks break.
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    std::vector<Letter> letters{r[0]};
    for (std::size_t i = 1; i < n; ++i) {
      if (mask & (1UL << (i - 1))) letters.back() += r[i];
      else letters.push_back(r[i]);
    }
    add(out, Word(letters), sign);
  }
  return out;
}

/// Bernoulli numbers by the Akiyama–Tanigawa algorithm (gives B1 = +1/2).
inline Rational bernoulli_akiyama_tanigawa(unsigned n) {
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rational(1, static_cast<long>(m) + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
  }
  return n == 1 ? -a[0] : a[0];
}

/// Singularity of a word by the literal conditions, written independently.
inline bool singular_by_definition(const std::vector<long>& k) {
  if (k[0] == 1) return true;
  if (k.size() >= 2) {
    const long s = k[0] + k[1];
    static const std::set<long> small{2, 1, 0};
    if (small.contains(s)) return true;
    for (long e = -2; e >= -200; e -= 2)
      if (s == e) return true;
  }
  long s = k[0] + (k.size() >= 2 ? k[1] : 0);
  for (std::size_t j = 3; j <= k.size(); ++j) {
    s += k[j - 1];
    if (s <= static_cast<long>(j)) return true;
  }
  return false;
}

/// #unordered pairs {k, l}, k ≠ l in [lo, hi], with both z_k z_l and z_l z_k singular.
inline std::size_t w2_predicate_count(long lo, long hi) {
  std::size_t count = 0;
  for (long k = lo; k <= hi; ++k)
    for (long l = lo; l < k; ++l)
      if (singular_by_definition({k, l}) && singular_by_definition({l, k})) ++count;
  return count;
}

}  // namespace qsh::oracle
