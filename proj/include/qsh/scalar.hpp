#pragma once

// The coefficient fields the algebra is instantiated over: Q and Q(t).

#include <concepts>
#include <string>
#include <string_view>

#include "qsh/ratfun.hpp"
#include "qsh/rational.hpp"

namespace qsh {

template <class S>
concept Field = std::regular<S> && std::constructible_from<S, long> && std::constructible_from<S, Rational> &&
                requires(S a, const S& b) {
                  { a += b } -> std::same_as<S&>;
                  { a -= b } -> std::same_as<S&>;
                  { a *= b } -> std::same_as<S&>;
                  { a /= b } -> std::same_as<S&>;
                  { -b } -> std::convertible_to<S>;
                  { b.is_zero() } -> std::convertible_to<bool>;
                  { b.sign() } -> std::convertible_to<int>;
                  { b.str() } -> std::convertible_to<std::string>;
                };

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr std::string_view name = "Q";
  static Rational parse(std::string_view text) { return Rational::parse(text); }
};

template <>
struct ScalarTraits<RationalFunction> {
  static constexpr std::string_view name = "Qt";
  static RationalFunction parse(std::string_view text) { return RationalFunction::parse(text); }
};

static_assert(Field<Rational>);
static_assert(Field<RationalFunction>);

}  // namespace qsh
