#pragma once

// Exact sparse Gaussian elimination kept in reduced row-echelon form.
// Columns are ordered by Key's ordering and the pivot of a row is its first
// nonzero column; there is no other pivoting.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qsh/scalar.hpp"

namespace qsh {

template <class Key, Field S>
using SparseVector = std::map<Key, S>;

template <class Key, Field S>
void axpy(SparseVector<Key, S>& y, const S& a, const SparseVector<Key, S>& x) {
  for (const auto& [k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, a * c);
    if (!inserted) {
      it->second += a * c;
      if (it->second.is_zero()) y.erase(it);
    } else if (it->second.is_zero()) {
      y.erase(it);
    }
  }
}

/// Incremental RREF over a field. Every row may carry a right-hand side (for
/// solving A·x = b) and a combination of caller-supplied generator tags (for
/// membership certificates).
template <class Key, Field S>
class Echelon {
 public:
  using Vector = SparseVector<Key, S>;
  using Combination = std::map<std::size_t, S>;

  struct Row {
    Vector vec;
    S rhs{0};
    Combination combo;
  };

  struct Reduced {
    Vector remainder;
    S rhs{0};
    /// The input equals Σ combo[g]·generator_g + remainder.
    Combination combo;
  };

  std::size_t rank() const { return rows_.size(); }
  /// Rows keyed by pivot column; pivots strictly increase in iteration order.
  const std::map<Key, Row>& rows() const { return rows_; }
  bool is_pivot(const Key& k) const { return rows_.contains(k); }

  Reduced reduce(const Vector& v, const S& rhs = S(0)) const {
    Reduced out{v, rhs, {}};
    std::vector<Key> hits;
    for (const auto& [k, c] : v)
      if (rows_.contains(k)) hits.push_back(k);
    // Pivot columns appear in no other row, so one pass suffices.
    for (const Key& k : hits) {
      auto it = out.remainder.find(k);
      if (it == out.remainder.end()) continue;
      const S c = it->second;
      const Row& row = rows_.at(k);
      axpy(out.remainder, -c, row.vec);
      out.rhs -= c * row.rhs;
      axpy(out.combo, c, row.combo);
    }
    return out;
  }

  /// Adds a row. Returns the reduction of the input; the row was independent
  /// iff the remainder is nonzero.
  Reduced insert(const Vector& v, const S& rhs = S(0), std::optional<std::size_t> tag = std::nullopt) {
    Reduced red = reduce(v, rhs);
    if (red.remainder.empty()) return red;

    Row row;
    row.vec = red.remainder;
    row.rhs = red.rhs;
    // row = input − Σ combo·gens; store its expression in generators.
    for (auto& [g, c] : red.combo) row.combo[g] = -c;
    if (tag) axpy(row.combo, S(1), Combination{{*tag, S(1)}});
    const Key pivot = row.vec.begin()->first;
    const S inv = S(1) / row.vec.begin()->second;
    for (auto& [k, c] : row.vec) c *= inv;
    row.rhs *= inv;
    for (auto& [g, c] : row.combo) c *= inv;

    for (auto& [p, other] : rows_) {
      auto it = other.vec.find(pivot);
      if (it == other.vec.end()) continue;
      const S c = it->second;
      axpy(other.vec, -c, row.vec);
      other.rhs -= c * row.rhs;
      axpy(other.combo, -c, row.combo);
    }
    rows_.emplace(pivot, std::move(row));
    return red;
  }

 private:
  std::map<Key, Row> rows_;
};

}  // namespace qsh
