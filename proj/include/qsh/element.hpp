#pragma once

// Formal linear combinations of words and of word pairs, in canonical form
// (ordered by the word order, no stored zero coefficients).

#include <map>
#include <utility>

#include "qsh/scalar.hpp"
#include "qsh/word.hpp"

namespace qsh {

template <Field S>
class Element {
 public:
  using Terms = std::map<Word, S>;
  using Scalar = S;

  Element() = default;
  Element(const Word& w) { terms_.emplace(w, S(1)); }  // NOLINT: a word is an element
  Element(const Word& w, S c) { add(w, std::move(c)); }

  static Element unit() { return Element(Word{}); }

  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }

  Element& add(const Word& w, const S& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  Element& operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  Element& operator*=(const S& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [w, x] : terms_) x *= c;
    }
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= S(-1); }
  friend Element operator*(const S& c, Element a) { return a *= c; }
  friend Element operator*(Element a, const S& c) { return a *= c; }

  friend bool operator==(const Element&, const Element&) = default;

  /// Words of maximal length l, as an element (depth-l component).
  Element component(std::size_t length) const {
    Element out;
    for (const auto& [w, c] : terms_)
      if (w.size() == length) out.terms_.emplace(w, c);
    return out;
  }

  /// Applies a word-to-element linear map termwise.
  template <class F>
  Element map_linear(F&& f) const {
    Element out;
    for (const auto& [w, c] : terms_) {
      Element image = f(w);
      image *= c;
      out += image;
    }
    return out;
  }

 private:
  Terms terms_;
};

template <Field S>
class TensorElement {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, S>;

  TensorElement() = default;

  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(const Word& a, const Word& b) const {
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? S(0) : it->second;
  }

  TensorElement& add(const Word& a, const Word& b, const S& c) {
    if (c.is_zero()) return *this;
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  TensorElement& operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;

  /// x ⊗ y for elements.
  static TensorElement product(const Element<S>& x, const Element<S>& y) {
    TensorElement out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) out.add(a, b, ca * cb);
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace qsh
