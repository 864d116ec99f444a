#include "qsh/fixtures.hpp"

#include <mutex>

#include "qsh/errors.hpp"

namespace qsh::fixtures {

Rational bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mu);
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    // B_m = −(1/(m+1)) Σ_{k<m} C(m+1, k) B_k
    Rational acc = 0;
    for (unsigned k = 0; k < m; ++k) acc += binomial(m + 1, k) * table[k];
    table.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return table[n];
}

Rational zeta_depth1(Letter k) {
  if (k >= 1) throw DomainError("zeta_depth1 is defined for k <= 0, got " + std::to_string(k));
  const auto n = static_cast<unsigned>(-k);
  const Rational b = bernoulli(n + 1) / Rational(static_cast<long>(n) + 1);
  return n % 2 == 0 ? b : -b;
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::published: return "published";
    case Provenance::analytic: return "analytic";
    case Provenance::forced: return "forced";
  }
  return "published";
}

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::GZ: return "GZ";
    case Scheme::EMS: return "EMS";
    case Scheme::MP: return "MP";
  }
  return "GZ";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "GZ") return Scheme::GZ;
  if (name == "EMS") return Scheme::EMS;
  if (name == "MP") return Scheme::MP;
  throw MissingEntry("unknown scheme '" + std::string(name) + "' (expected GZ|EMS|MP|EMS_t)");
}

template <class S>
const S& SchemeTable<S>::value(const Word& w) const {
  auto it = entries.find(w);
  if (it == entries.end()) throw MissingEntry("scheme " + name + " has no value at " + w.str());
  return it->second.value;
}

template struct SchemeTable<Rational>;
template struct SchemeTable<RationalFunction>;

namespace {

const Word kMinusOneMinusThree{-1, -3};
const Word kMinusThreeMinusOne{-3, -1};

Rational published(Scheme s) {
  switch (s) {
    case Scheme::GZ: return Rational(83, 64512);
    case Scheme::EMS: return Rational(121, 94080);
    case Scheme::MP: return Rational(1, 840);
  }
  return 0;
}

Alphabet scheme_alphabet(Scheme s) {
  switch (s) {
    case Scheme::GZ: return Alphabet::nonpositive;
    case Scheme::EMS: return Alphabet::negative;
    case Scheme::MP: return Alphabet::all;
  }
  return Alphabet::all;
}

template <class S>
void add_depth1(SchemeTable<S>& t, Letter k_min) {
  const Letter k_max = t.alphabet == Alphabet::negative ? -1 : 0;
  for (Letter k = k_min; k <= k_max; ++k) t.entries.emplace(Word{k}, SchemeEntry<S>{S(zeta_depth1(k)), Provenance::analytic});
}

}  // namespace

SchemeTable<Rational> scheme_table(Scheme s, Letter k_min) {
  if (k_min > -4) throw DomainError("scheme tables need letters down to -4 for the forced partner");
  SchemeTable<Rational> t{std::string(to_string(s)), scheme_alphabet(s), {}};
  add_depth1(t, k_min);
  const Rational v = published(s);
  t.entries.emplace(kMinusOneMinusThree, SchemeEntry<Rational>{v, Provenance::published});
  t.entries.emplace(kMinusThreeMinusOne, SchemeEntry<Rational>{forced_partner(v), Provenance::forced});
  return t;
}

SchemeTable<RationalFunction> ems_t_table(Letter k_min) {
  if (k_min > -4) throw DomainError("scheme tables need letters down to -4 for the forced partner");
  SchemeTable<RationalFunction> t{"EMS_t", Alphabet::negative, {}};
  add_depth1(t, k_min);
  const RationalFunction v = ems_t_value(kMinusOneMinusThree);
  t.entries.emplace(kMinusOneMinusThree, SchemeEntry<RationalFunction>{v, Provenance::published});
  t.entries.emplace(kMinusThreeMinusOne, SchemeEntry<RationalFunction>{forced_partner(v), Provenance::forced});
  return t;
}

Rational scheme_value(Scheme s, const Word& w) { return scheme_table(s).value(w); }

RationalFunction ems_t_value(const Word& w) {
  if (w != kMinusOneMinusThree) throw MissingEntry("EMS_t has no value at " + w.str());
  // (1/8064)(166t² + 166t + 31) / ((4t + 3)(4t + 1))
  const Polynomial t = Polynomial::t();
  const Polynomial num = (Polynomial(166) * t * t + Polynomial(166) * t + Polynomial(31)).scaled(Rational(1, 8064));
  const Polynomial den = (Polynomial(4) * t + Polynomial(3)) * (Polynomial(4) * t + Polynomial(1));
  return RationalFunction(num, den);
}

Rational forced_partner(const Rational& v) {
  return zeta_depth1(-1) * zeta_depth1(-3) - zeta_depth1(-4) - v;
}

RationalFunction forced_partner(const RationalFunction& v) {
  return RationalFunction(forced_partner(Rational(0))) - v;
}

}  // namespace qsh::fixtures
