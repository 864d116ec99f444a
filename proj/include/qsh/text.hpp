#pragma once

// Text forms of elements and tensors, and the character-file format.
//
//   word     := '[' (int (',' int)*)? ']'
//   rational := int ['/' posint]
//   ratfun   := '(' polynomial ')' ['/(' polynomial ')']
//   element  := '0' | ['-'] [scalar '*'] word (('+'|'-') [scalar '*'] word)*
//
// Printing emits canonical word order and reduced scalars, so
// print(parse(print(x))) == print(x).

#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "qsh/characters.hpp"
#include "qsh/element.hpp"
#include "qsh/errors.hpp"
#include "qsh/scalar.hpp"
#include "qsh/window.hpp"

namespace qsh {

namespace detail {

template <Field S>
void append_term(std::string& out, bool first, const S& c, const std::string& body) {
  const bool neg = c.sign() < 0;
  const S mag = neg ? -c : c;
  out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  if (mag != S(1)) out += mag.str() + "*";
  out += body;
}

}  // namespace detail

template <Field S>
std::string print_element(const Element<S>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x) {
    detail::append_term(out, first, c, w.str());
    first = false;
  }
  return out;
}

/// Terms as `c*([u],[v])`.
template <Field S>
std::string print_tensor(const TensorElement<S>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    detail::append_term(out, first, c, "(" + k.first.str() + "," + k.second.str() + ")");
    first = false;
  }
  return out;
}

template <Field S>
Element<S> parse_element(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect_more = [&](const char* what) {
    if (pos >= text.size()) throw ParseError(pos, std::string("unexpected end of input, expected ") + what);
  };

  {
    std::string_view rest = text;
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
    if (rest == "0") return {};
  }

  Element<S> out;
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) {
      if (first) throw ParseError(pos, "empty element");
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw ParseError(pos, "expected '+' or '-' between terms");
    }
    expect_more("a term");

    S coeff(1);
    if (text[pos] != '[') {
      const std::size_t start = pos;
      if (text[pos] == '(') {
        int depth = 0;
        // One or two parenthesised polynomials joined by '/'.
        for (int group = 0; group < 2; ++group) {
          if (pos >= text.size() || text[pos] != '(') break;
          for (; pos < text.size(); ++pos) {
            if (text[pos] == '(') ++depth;
            if (text[pos] == ')' && --depth == 0) {
              ++pos;
              break;
            }
          }
          if (depth != 0) throw ParseError(start, "unbalanced parenthesis in scalar");
          if (group == 0 && pos + 1 < text.size() && text[pos] == '/' && text[pos + 1] == '(') ++pos;
          else break;
        }
      } else {
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        if (pos == start) throw ParseError(pos, "expected scalar or word");
      }
      try {
        coeff = ScalarTraits<S>::parse(text.substr(start, pos - start));
      } catch (const ParseError& e) {
        throw ParseError(start + e.position(), "malformed scalar '" + std::string(text.substr(start, pos - start)) + "'");
      }
      skip_ws();
      if (pos >= text.size() || text[pos] != '*') throw ParseError(pos, "expected '*' between scalar and word");
      ++pos;
      skip_ws();
      expect_more("a word");
    }
    if (text[pos] != '[') throw ParseError(pos, "expected '[' to open a word");
    const std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) throw ParseError(pos, "unterminated word");
    Word w;
    try {
      w = Word::parse(text.substr(pos, close + 1 - pos));
    } catch (const ParseError& e) {
      throw ParseError(pos + e.position(), "malformed word");
    }
    pos = close + 1;
    out.add(w, sign < 0 ? -coeff : coeff);
    first = false;
  }
  return out;
}

// Character files:
//   #qsh-char v1
//   #window MIN..MAX L ALPHABET
//   #scalar Q|Qt
//   word<TAB>scalar      (one line per window word, canonical order on output)

inline constexpr std::string_view kCharFileMagic = "#qsh-char v1";

template <Field S>
void write_char_file(std::ostream& os, const LinearMap<S>& f) {
  os << kCharFileMagic << '\n';
  os << "#window " << f.window().str() << '\n';
  os << "#scalar " << ScalarTraits<S>::name << '\n';
  for (const auto& [w, c] : f.table()) os << w.str() << '\t' << c.str() << '\n';
}

template <Field S>
std::string char_file_string(const LinearMap<S>& f) {
  std::ostringstream os;
  write_char_file(os, f);
  return os.str();
}

struct CharFileHeader {
  Window window{0, 0, 1};
  std::string scalar;
};

/// Reads the three header lines; throws ParseError naming the line.
CharFileHeader read_char_header(std::istream& in);

template <Field S>
struct CharFileBody {
  Window window;
  std::map<Word, S> entries;
};

/// Reads entries after the header. With `require_complete` every window word
/// must appear exactly once; otherwise any subset of window words is allowed.
template <Field S>
CharFileBody<S> read_char_body(std::istream& in, const CharFileHeader& header, bool require_complete) {
  if (header.scalar != ScalarTraits<S>::name)
    throw ParseError(0, "character file scalar is " + header.scalar + ", expected " + std::string(ScalarTraits<S>::name));
  CharFileBody<S> body{header.window, {}};
  std::string line;
  std::size_t line_no = 3;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tab == std::string::npos) throw ParseError(0, where + "expected word<TAB>scalar");
    Word w;
    S value;
    try {
      w = Word::parse(std::string_view(line).substr(0, tab));
      value = ScalarTraits<S>::parse(std::string_view(line).substr(tab + 1));
    } catch (const ParseError& e) {
      throw ParseError(e.position(), where + e.what());
    }
    if (!header.window.contains(w)) throw OutOfWindow(w.str(), where + "character file entry");
    if (!body.entries.emplace(w, value).second) throw ParseError(0, where + "duplicate word " + w.str());
  }
  if (require_complete)
    for (const Word& w : header.window.enumerate())
      if (!body.entries.contains(w)) throw ParseError(0, "character file is missing window word " + w.str());
  return body;
}

template <Field S>
LinearMap<S> read_char_file(std::istream& in) {
  const CharFileHeader header = read_char_header(in);
  auto body = read_char_body<S>(in, header, true);
  return LinearMap<S>(body.window, std::move(body.entries));
}

}  // namespace qsh
