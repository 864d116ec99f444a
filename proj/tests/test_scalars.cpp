#include "doctest.h"

#include "qsh/errors.hpp"
#include "qsh/ratfun.hpp"
#include "qsh/rational.hpp"

using qsh::Polynomial;
using qsh::Rational;
using qsh::RationalFunction;

TEST_CASE("rationals are stored reduced with positive denominator") {
  const Rational r(6, -4);
  CHECK(r.numerator_str() == "-3");
  CHECK(r.denominator_str() == "2");
  CHECK(r.str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("83/64512") == Rational(83, 64512));
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), qsh::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), qsh::ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), qsh::ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), qsh::DomainError);
}

TEST_CASE("rational powers and combinatorics") {
  CHECK(qsh::pow(Rational(2), -3) == Rational(1, 8));
  CHECK(qsh::pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(qsh::pow(Rational(5), 0) == Rational(1));
  CHECK(qsh::factorial(5) == Rational(120));
  CHECK(qsh::binomial(6, 2) == Rational(15));
}

TEST_CASE("polynomial arithmetic and gcd") {
  const Polynomial t = Polynomial::t();
  const Polynomial a = (t + Polynomial(1)) * (t - Polynomial(2));
  const Polynomial b = (t + Polynomial(1)) * (t + Polynomial(3));
  CHECK(gcd(a, b) == t + Polynomial(1));
  auto [q, r] = a.divmod(t - Polynomial(2));
  CHECK(q == t + Polynomial(1));
  CHECK(r.is_zero());
  CHECK(a(Rational(2)).is_zero());
  CHECK(a.str() == "1*t^2 - 1*t^1 - 2*t^0");
  CHECK(qsh::parse_polynomial("t^2 - t - 2") == a);
  CHECK(qsh::parse_polynomial("1*t^2 - 1*t^1 - 2*t^0") == a);
  CHECK_THROWS_AS(qsh::parse_polynomial("t^"), qsh::ParseError);
  CHECK_THROWS_AS(qsh::parse_polynomial("2 3"), qsh::ParseError);
}

TEST_CASE("rational functions normalize to reduced form with monic denominator") {
  const Polynomial t = Polynomial::t();
  const RationalFunction f((t + Polynomial(1)).scaled(Rational(2)) * t, (t + Polynomial(1)).scaled(Rational(4)));
  CHECK(f.numerator() == t.scaled(Rational(1, 2)));
  CHECK(f.denominator() == Polynomial(1));
  CHECK(f.str() == "(1/2*t^1)");

  const RationalFunction g(Polynomial(3), t.scaled(Rational(6)) + Polynomial(3));
  CHECK(g.denominator() == t + Polynomial(Rational(1, 2)));
  CHECK(g.numerator() == Polynomial(Rational(1, 2)));
  // Re-normalizing is a no-op.
  CHECK(RationalFunction(g.numerator(), g.denominator()) == g);

  CHECK(g + RationalFunction(-1) * g == RationalFunction(0));
  CHECK((g / g) == RationalFunction(1));
  CHECK(RationalFunction(Rational(3, 4)).str() == "3/4");
  CHECK_THROWS_AS(g(Rational(-1, 2)), qsh::DomainError);
}

TEST_CASE("rational function text round trip") {
  const Polynomial t = Polynomial::t();
  const RationalFunction f(t * t + Polynomial(-3), t.scaled(Rational(2)) + Polynomial(1));
  CHECK(RationalFunction::parse(f.str()) == f);
  CHECK(RationalFunction::parse("-(t)/(t + 1)") == -RationalFunction(t, t + Polynomial(1)));
  CHECK(RationalFunction::parse("5/7") == RationalFunction(Rational(5, 7)));
  CHECK_THROWS_AS(RationalFunction::parse("(t)/(0)"), qsh::ParseError);
  CHECK_THROWS_AS(RationalFunction::parse("(t"), qsh::ParseError);
}
