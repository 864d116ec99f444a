#pragma once

// Words z_{k1} ... z_{kn} over the integer alphabet, as immutable values.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsh {

using Letter = std::int64_t;

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses `'[' (int (',' int)*)? ']'`, whitespace tolerated.
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word prefix(std::size_t n) const { return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n)); }
  Word suffix_from(std::size_t i) const { return Word(std::vector<Letter>(letters_.begin() + i, letters_.end())); }
  Word prepended(Letter a) const;
  Word appended(Letter a) const;
  Word reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }
  Letter sum() const;
  friend Word operator+(const Word& u, const Word& v);  // concatenation

  friend bool operator==(const Word&, const Word&) = default;
  /// Total order: shorter words first, then lexicographic on letters.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }

  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace qsh

template <>
struct std::hash<qsh::Word> {
  std::size_t operator()(const qsh::Word& w) const noexcept {
    std::size_t h = w.size();
    for (qsh::Letter a : w) h ^= std::hash<qsh::Letter>{}(a) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
