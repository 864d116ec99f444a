#include "qsh/word.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>

#include "qsh/errors.hpp"

namespace qsh {

Word Word::prepended(Letter a) const {
  std::vector<Letter> v;
  v.reserve(letters_.size() + 1);
  v.push_back(a);
  v.insert(v.end(), letters_.begin(), letters_.end());
  return Word(std::move(v));
}

Word Word::appended(Letter a) const {
  std::vector<Letter> v = letters_;
  v.push_back(a);
  return Word(std::move(v));
}

Letter Word::sum() const { return std::accumulate(letters_.begin(), letters_.end(), Letter{0}); }

Word operator+(const Word& u, const Word& v) {
  std::vector<Letter> out(u.letters_);
  out.insert(out.end(), v.letters_.begin(), v.letters_.end());
  return Word(std::move(out));
}

std::string Word::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  out += ']';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

Word Word::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw ParseError(pos, "expected '[' to open a word");
  ++pos;
  std::vector<Letter> letters;
  skip_ws();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      if (first != last && *first == '+') ++first;
      Letter value{};
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr == first) throw ParseError(pos, "expected integer letter");
      letters.push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError(pos, "expected ',' or ']' in word");
    }
  }
  skip_ws();
  if (pos != text.size()) throw ParseError(pos, "trailing characters after word");
  return Word(std::move(letters));
}

}  // namespace qsh
