#include "qsh/window.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qsh/errors.hpp"

namespace qsh {

std::string_view to_string(Alphabet a) {
  switch (a) {
    case Alphabet::all: return "all";
    case Alphabet::nonpositive: return "nonpositive";
    case Alphabet::negative: return "negative";
  }
  return "all";
}

Alphabet parse_alphabet(std::string_view text) {
  if (text == "all") return Alphabet::all;
  if (text == "nonpositive") return Alphabet::nonpositive;
  if (text == "negative") return Alphabet::negative;
  throw ParseError(0, "unknown alphabet '" + std::string(text) + "' (expected all|nonpositive|negative)");
}

Window::Window(Letter letter_min, Letter letter_max, std::size_t max_len, Alphabet alphabet)
    : min_(letter_min), max_(letter_max), max_len_(max_len), alphabet_(alphabet) {
  if (alphabet_ == Alphabet::nonpositive) max_ = std::min<Letter>(max_, 0);
  if (alphabet_ == Alphabet::negative) max_ = std::min<Letter>(max_, -1);
  if (min_ > max_) throw DomainError("window letter range is empty: " + str());
  if (max_len_ == 0) throw DomainError("window max_len must be positive");
}

bool Window::contains(const Word& w) const {
  if (w.size() > max_len_) return false;
  return std::all_of(w.begin(), w.end(), [&](Letter a) { return contains_letter(a); });
}

bool Window::is_subset_of(const Window& o) const {
  return min_ >= o.min_ && max_ <= o.max_ && max_len_ <= o.max_len_;
}

std::vector<Letter> Window::letters() const {
  std::vector<Letter> out;
  for (Letter a = min_; a <= max_; ++a) out.push_back(a);
  return out;
}

std::vector<Word> Window::words_of_length(std::size_t length) const {
  std::vector<Word> out;
  if (length > max_len_) return out;
  std::vector<Letter> current(length, min_);
  while (true) {
    out.emplace_back(current);
    // Odometer increment, last letter fastest: lexicographic order.
    std::size_t i = length;
    while (i > 0 && current[i - 1] == max_) {
      current[i - 1] = min_;
      --i;
    }
    if (i == 0) break;
    ++current[i - 1];
  }
  return out;
}

std::vector<Word> Window::enumerate() const {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len_; ++len) {
    auto words = words_of_length(len);
    out.insert(out.end(), std::make_move_iterator(words.begin()), std::make_move_iterator(words.end()));
  }
  return out;
}

std::string Window::str() const {
  return std::to_string(min_) + ".." + std::to_string(max_) + " " + std::to_string(max_len_) + " " +
         std::string(to_string(alphabet_));
}

std::pair<Letter, Letter> parse_letter_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw ParseError(0, "expected letter range MIN..MAX");
  auto number = [&](std::string_view s, std::size_t offset) {
    Letter v{};
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw ParseError(offset, "malformed integer in letter range");
    return v;
  };
  return {number(text.substr(0, dots), 0), number(text.substr(dots + 2), dots + 2)};
}

Window Window::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string range, len, alphabet;
  if (!(in >> range >> len >> alphabet)) throw ParseError(0, "expected 'MIN..MAX L ALPHABET'");
  auto [lo, hi] = parse_letter_range(range);
  std::size_t max_len{};
  auto [ptr, ec] = std::from_chars(len.data(), len.data() + len.size(), max_len);
  if (ec != std::errc{} || ptr != len.data() + len.size()) throw ParseError(range.size() + 1, "malformed max_len");
  return Window(lo, hi, max_len, parse_alphabet(alphabet));
}

}  // namespace qsh
