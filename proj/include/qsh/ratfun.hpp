#pragma once

// Univariate polynomials over Q in the formal variable t, and the field Q(t)
// of rational functions built on them.

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qsh/rational.hpp"

namespace qsh {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  /// Coefficients from degree 0 upward; trailing zeros are dropped.
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial t() { return Polynomial(std::vector<Rational>{0, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& at) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(Polynomial a);
  Polynomial scaled(const Rational& c) const;

  /// Euclidean division; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial monic() const;
  /// Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(Polynomial a, Polynomial b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// `c*t^k + ...` in descending degree; "0" for the zero polynomial.
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of Q(t): numerator/denominator with gcd 1 and monic denominator,
/// so equality is structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}   // NOLINT
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction t() { return RationalFunction(Polynomial::t(), Polynomial(1)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Sign of the numerator's leading coefficient.
  int sign() const { return num_.leading().sign(); }

  /// Exact substitution t := at. Throws DomainError at a pole.
  Rational operator()(const Rational& at) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// Constants print as rationals, otherwise `(num)` or `(num)/(den)`.
  std::string str() const;

  /// Accepts a rational literal, `(poly)`, or `(poly)/(poly)`.
  static RationalFunction parse(std::string_view text);

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

/// Parses a sum of terms `c`, `c*t^k`, `c*t`, `t^k`, `t`.
Polynomial parse_polynomial(std::string_view text);

}  // namespace qsh
