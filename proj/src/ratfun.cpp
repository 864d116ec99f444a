#include "qsh/ratfun.hpp"

#include <cctype>
#include <ostream>

#include "qsh/errors.hpp"

namespace qsh {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  r.trim();
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial rem = *this;
  std::vector<Rational> quot;
  const int dd = divisor.degree();
  if (rem.degree() >= dd) quot.resize(static_cast<std::size_t>(rem.degree() - dd + 1));
  const Rational lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Rational c = rem.leading() / lead;
    quot[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= dd; ++i)
      rem.coeffs_[static_cast<std::size_t>(i + shift)] -= c * divisor.coeffs_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (first) {
      out += c.str();
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += (c.sign() < 0 ? -c : c).str();
    }
    out += "*t^" + std::to_string(k);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

namespace {

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view s) : s_(s) {}

  Polynomial parse() {
    Polynomial acc;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-' between polynomial terms");
      }
      acc += term().scaled(Rational(sign));
      first = false;
    }
    return acc;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return Rational::parse(s_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "malformed coefficient");
    }
  }

  Polynomial term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        return Polynomial(coeff);
      }
    }
    if (at_end() || peek() != 't') {
      throw ParseError(pos_, have_coeff ? "expected 't' after '*'" : "expected coefficient or 't'");
    }
    ++pos_;
    long exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) throw ParseError(pos_, "expected exponent");
      exponent = std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    std::vector<Rational> c(static_cast<std::size_t>(exponent) + 1);
    c.back() = coeff;
    return Polynomial(std::move(c));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Returns the index of the ')' matching the '(' at `open`.
std::size_t matching_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  throw ParseError(open, "unbalanced parenthesis");
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyScanner(text).parse(); }

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    num_ = num_.scaled(Rational(1) / lead);
    den_ = den_.scaled(Rational(1) / lead);
  }
}

Rational RationalFunction::operator()(const Rational& at) const {
  const Rational d = den_(at);
  if (d.is_zero()) throw DomainError("rational function has a pole at t = " + at.str());
  return num_(at) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("division by zero in Q(t)");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RationalFunction::str() const {
  if (is_constant()) return num_.coefficient(0).str();
  std::string out = "(" + num_.str() + ")";
  if (den_ != Polynomial(1)) out += "/(" + den_.str() + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

RationalFunction RationalFunction::parse(std::string_view text) {
  std::string_view s = trim_view(text);
  if (s.empty()) throw ParseError(0, "empty scalar");
  const std::size_t offset = static_cast<std::size_t>(s.data() - text.data());
  bool negate = false;
  std::string_view body = s;
  if (body.size() > 1 && body.front() == '-' && body[1] == '(') {
    negate = true;
    body.remove_prefix(1);
  }
  if (body.front() != '(') return RationalFunction(Rational::parse(body));

  const std::size_t base = offset + (negate ? 1 : 0);
  auto wrap = [&](std::size_t at, auto&& fn) {
    try {
      return fn();
    } catch (const ParseError& e) {
      throw ParseError(base + at + e.position(), "malformed polynomial");
    }
  };
  const std::size_t close = matching_paren(body, 0);
  Polynomial num = wrap(1, [&] { return parse_polynomial(body.substr(1, close - 1)); });
  Polynomial den(1);
  std::string_view rest = body.substr(close + 1);
  if (!rest.empty()) {
    if (rest.size() < 3 || rest[0] != '/' || rest[1] != '(')
      throw ParseError(base + close + 1, "expected '/(' after numerator");
    const std::size_t dclose = matching_paren(rest, 1);
    if (dclose + 1 != rest.size()) throw ParseError(base + close + 2 + dclose, "trailing characters after denominator");
    den = wrap(close + 3, [&] { return parse_polynomial(rest.substr(2, dclose - 2)); });
    if (den.is_zero()) throw ParseError(base + close + 3, "zero denominator");
  }
  RationalFunction f(std::move(num), std::move(den));
  return negate ? -f : f;
}

}  // namespace qsh
