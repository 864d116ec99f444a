#pragma once

// Finite truncations of the integer alphabet: a letter range, a maximum word
// length and an optional sign restriction.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qsh/word.hpp"

namespace qsh {

enum class Alphabet { all, nonpositive, negative };

std::string_view to_string(Alphabet a);
Alphabet parse_alphabet(std::string_view text);

class Window {
 public:
  /// The restriction caps letter_max (at 0 or -1); throws DomainError if
  /// the resulting letter range is empty or max_len is 0.
  Window(Letter letter_min, Letter letter_max, std::size_t max_len, Alphabet alphabet = Alphabet::all);

  Letter letter_min() const { return min_; }
  Letter letter_max() const { return max_; }
  std::size_t max_len() const { return max_len_; }
  Alphabet alphabet() const { return alphabet_; }

  bool contains_letter(Letter a) const { return a >= min_ && a <= max_; }
  bool contains(const Word& w) const;
  bool is_subset_of(const Window& other) const;

  std::vector<Letter> letters() const;
  /// All words of length ≤ max_len, the empty word first, in canonical order.
  std::vector<Word> enumerate() const;
  std::vector<Word> words_of_length(std::size_t length) const;

  /// `MIN..MAX L ALPHABET`, as used in character-file headers.
  std::string str() const;
  static Window parse(std::string_view text);

  friend bool operator==(const Window&, const Window&) = default;

 private:
  Letter min_;
  Letter max_;
  std::size_t max_len_;
  Alphabet alphabet_;
};

/// Parses a letter range `MIN..MAX`.
std::pair<Letter, Letter> parse_letter_range(std::string_view text);

}  // namespace qsh
