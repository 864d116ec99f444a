#pragma once

// Exact reference values: Bernoulli numbers, ζ at nonpositive integers, and
// the three published renormalized values of ζ(−1,−3) with their partners.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsh/ratfun.hpp"
#include "qsh/rational.hpp"
#include "qsh/window.hpp"
#include "qsh/word.hpp"

namespace qsh::fixtures {

/// B_n with B_1 = −1/2, from Σ_{k=0}^{n} C(n+1, k) B_k = 0.
Rational bernoulli(unsigned n);

/// ζ(k) for k ≤ 0: ζ(−n) = (−1)^n B_{n+1}/(n+1). Rejects k ≥ 1.
Rational zeta_depth1(Letter k);

enum class Provenance { published, analytic, forced };
std::string_view to_string(Provenance p);

template <class S>
struct SchemeEntry {
  S value;
  Provenance provenance;
};

/// A renormalization scheme's known values.
template <class S>
struct SchemeTable {
  std::string name;
  Alphabet alphabet;
  std::map<Word, SchemeEntry<S>> entries;

  const S& value(const Word& w) const;
};

enum class Scheme { GZ, EMS, MP };
std::string_view to_string(Scheme s);
Scheme parse_scheme(std::string_view name);

/// Depth-1 letters k_min..0 (or ..-1 on the negative alphabet), the published
/// ζ(−1,−3) and its forced partner ζ(−3,−1).
SchemeTable<Rational> scheme_table(Scheme s, Letter k_min = -4);
/// The t-family with the same depth-1 entries; its ζ(−1,−3) is a rational function.
SchemeTable<RationalFunction> ems_t_table(Letter k_min = -4);

/// Stored value; throws MissingEntry unless (scheme, w) is tabulated.
Rational scheme_value(Scheme s, const Word& w);

/// ζ_{EMS,t}(w), only for w = [−1,−3].
RationalFunction ems_t_value(const Word& w);

/// ζ(−3,−1) forced by ζ(−1)ζ(−3) = ζ(−1,−3) + ζ(−3,−1) + ζ(−4) from v = ζ(−1,−3).
Rational forced_partner(const Rational& v);
RationalFunction forced_partner(const RationalFunction& v);

}  // namespace qsh::fixtures
