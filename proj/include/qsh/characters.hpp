#pragma once

// Window-tabulated linear maps on the quasi-shuffle algebra: characters,
// infinitesimal characters, convolution, exp/log, the transfer group and its
// action on renormalizations.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "qsh/coideal.hpp"
#include "qsh/element.hpp"
#include "qsh/errors.hpp"
#include "qsh/eulerian.hpp"
#include "qsh/hopf.hpp"
#include "qsh/linalg.hpp"
#include "qsh/window.hpp"

namespace qsh {

enum class MapKind { plain, character, infinitesimal };

std::string_view to_string(MapKind k);

template <Field S>
class LinearMap {
 public:
  using Table = std::map<Word, S>;

  /// The table must hold exactly the words of enumerate(window).
  LinearMap(Window window, Table table, MapKind kind = MapKind::plain)
      : window_(std::move(window)), table_(std::move(table)), kind_(kind) {
    const std::vector<Word> words = window_.enumerate();
    for (const Word& w : words)
      if (!table_.contains(w)) throw DomainError("linear map table is missing window word " + w.str());
    if (table_.size() != words.size()) {
      for (const auto& [w, c] : table_)
        if (!window_.contains(w)) throw OutOfWindow(w.str(), "linear map table entry");
    }
  }

  /// Tabulates f on every window word.
  template <class F>
  static LinearMap tabulate(const Window& window, F&& f, MapKind kind = MapKind::plain) {
    Table table;
    for (const Word& w : window.enumerate()) table.emplace(w, f(w));
    return LinearMap(window, std::move(table), kind);
  }

  /// e = u∘ε.
  static LinearMap unit(const Window& window) {
    return tabulate(window, [](const Word& w) { return w.empty() ? S(1) : S(0); }, MapKind::character);
  }
  static LinearMap zero(const Window& window) {
    return tabulate(window, [](const Word&) { return S(0); }, MapKind::infinitesimal);
  }

  const Window& window() const { return window_; }
  const Table& table() const { return table_; }
  MapKind kind() const { return kind_; }
  LinearMap with_kind(MapKind k) const { return LinearMap(window_, table_, k); }

  const S& operator()(const Word& w) const {
    auto it = table_.find(w);
    if (it == table_.end()) throw OutOfWindow(w.str(), "linear map evaluation");
    return it->second;
  }

  LinearMap& operator+=(const LinearMap& o) {
    require_same_window(o);
    for (auto& [w, c] : table_) c += o.table_.at(w);
    kind_ = MapKind::plain;
    return *this;
  }
  LinearMap& operator-=(const LinearMap& o) {
    require_same_window(o);
    for (auto& [w, c] : table_) c -= o.table_.at(w);
    kind_ = MapKind::plain;
    return *this;
  }
  LinearMap& operator*=(const S& s) {
    for (auto& [w, c] : table_) c *= s;
    kind_ = MapKind::plain;
    return *this;
  }
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(const S& s, LinearMap a) { return a *= s; }

  /// Same window and table; the kind tag is not compared.
  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.window_ == b.window_ && a.table_ == b.table_;
  }

  void require_same_window(const LinearMap& o) const {
    if (!(window_ == o.window_))
      throw DomainError("linear maps live on different windows: " + window_.str() + " vs " + o.window_.str());
  }

 private:
  Window window_;
  Table table_;
  MapKind kind_;
};

template <Field S>
S eval(const LinearMap<S>& f, const Element<S>& x) {
  S acc(0);
  for (const auto& [w, c] : x) acc += c * f(w);
  return acc;
}

namespace detail {

// Visits (u, v, u∗v) for nonempty window words u ≤ v whose product lies in
// the window; stops when the visitor returns false.
template <class Visitor>
bool for_each_window_product(const Window& window, Visitor&& visit) {
  const std::vector<Word> words = window.enumerate();
  for (std::size_t i = 1; i < words.size(); ++i) {
    for (std::size_t j = i; j < words.size(); ++j) {
      const Word& u = words[i];
      const Word& v = words[j];
      if (u.size() + v.size() > window.max_len()) continue;
      const WordCounts product = quasi_shuffle_counts(u, v);
      bool inside = true;
      for (const auto& [w, n] : product) inside = inside && window.contains(w);
      if (inside && !visit(u, v, product)) return false;
    }
  }
  return true;
}

template <Field S>
S eval_counts(const LinearMap<S>& f, const WordCounts& counts) {
  S acc(0);
  for (const auto& [w, n] : counts) acc += S(static_cast<long>(n)) * f(w);
  return acc;
}

}  // namespace detail

/// f(𝟙) = 1 and f(u)f(v) = f(u∗v) for every window pair whose product stays
/// in the window.
template <Field S>
bool check_character(const LinearMap<S>& f) {
  if (f(Word{}) != S(1)) return false;
  return detail::for_each_window_product(f.window(), [&](const Word& u, const Word& v, const WordCounts& p) {
    return f(u) * f(v) == detail::eval_counts(f, p);
  });
}

/// f(𝟙) = 0 and f vanishes on every in-window product of nonempty words.
template <Field S>
bool check_infinitesimal(const LinearMap<S>& f) {
  if (!f(Word{}).is_zero()) return false;
  return detail::for_each_window_product(f.window(), [&](const Word&, const Word&, const WordCounts& p) {
    return detail::eval_counts(f, p).is_zero();
  });
}

/// Returns f tagged as a character, verifying the law if it is not tagged.
template <Field S>
LinearMap<S> require_character(const LinearMap<S>& f, std::string_view op) {
  if (f.kind() == MapKind::character) return f;
  if (!check_character(f)) throw DomainError(std::string(op) + " requires a character");
  return f.with_kind(MapKind::character);
}

template <Field S>
LinearMap<S> require_infinitesimal(const LinearMap<S>& f, std::string_view op) {
  if (f.kind() == MapKind::infinitesimal) return f;
  if (!check_infinitesimal(f)) throw DomainError(std::string(op) + " requires an infinitesimal character");
  return f.with_kind(MapKind::infinitesimal);
}

/// (f⋆g)(w) = Σ_{uv=w} f(u)g(v) on the common window.
template <Field S>
LinearMap<S> convolution_product(const LinearMap<S>& f, const LinearMap<S>& g) {
  f.require_same_window(g);
  const bool chars = f.kind() == MapKind::character && g.kind() == MapKind::character;
  return LinearMap<S>::tabulate(
      f.window(),
      [&](const Word& w) {
        S acc(0);
        for (std::size_t i = 0; i <= w.size(); ++i) acc += f(w.prefix(i)) * g(w.suffix_from(i));
        return acc;
      },
      chars ? MapKind::character : MapKind::plain);
}

/// Convolution inverse by the deconcatenation recursion
/// g(w) = −f(𝟙)⁻¹ Σ_{uv=w, u≠𝟙} f(u) g(v). Never leaves the window; for a
/// character it coincides with φ∘S.
template <Field S>
LinearMap<S> conv_inverse(const LinearMap<S>& f) {
  const S f0 = f(Word{});
  if (f0.is_zero()) throw DomainError("convolution inverse requires f(1) != 0");
  const S inv0 = S(1) / f0;
  typename LinearMap<S>::Table table;
  for (const Word& w : f.window().enumerate()) {
    if (w.empty()) {
      table.emplace(w, inv0);
      continue;
    }
    S acc(0);
    for (std::size_t i = 1; i <= w.size(); ++i) acc += f(w.prefix(i)) * table.at(w.suffix_from(i));
    table.emplace(w, -inv0 * acc);
  }
  return LinearMap<S>(f.window(), std::move(table), f.kind() == MapKind::character ? MapKind::character : MapKind::plain);
}

/// φ⁻¹ = φ∘S tabulated on `target`; every word of S(w), w in target, must
/// lie in φ's window, otherwise OutOfWindow names the first offending word.
template <Field S>
LinearMap<S> char_inverse(const LinearMap<S>& phi, const Window& target) {
  const LinearMap<S> chi = require_character(phi, "char_inverse");
  return LinearMap<S>::tabulate(
      target,
      [&](const Word& w) {
        const Element<S> s = antipode<S>(w);
        for (const auto& [u, c] : s)
          if (!chi.window().contains(u)) throw OutOfWindow(u.str(), "antipode of " + w.str());
        return eval(chi, s);
      },
      MapKind::character);
}

template <Field S>
LinearMap<S> char_inverse(const LinearMap<S>& phi) {
  return char_inverse(phi, phi.window());
}

/// Window words w whose antipode S(w) stays inside the window.
template <Field S>
std::vector<Word> antipode_closed_words(const Window& window) {
  std::vector<Word> out;
  for (const Word& w : window.enumerate()) {
    bool inside = true;
    for (const auto& [u, c] : antipode<S>(w)) inside = inside && window.contains(u);
    if (inside) out.push_back(w);
  }
  return out;
}

template <Field S>
LinearMap<S> convolution_power(const LinearMap<S>& f, unsigned k) {
  LinearMap<S> out = LinearMap<S>::unit(f.window());
  for (unsigned i = 0; i < k; ++i) out = convolution_product(out, f);
  return out;
}

/// exp⋆(ξ) = e + Σ_{k≥1} ξ^{⋆k}/k!, finite by conilpotence.
template <Field S>
LinearMap<S> conv_exp(const LinearMap<S>& xi) {
  const LinearMap<S> x = require_infinitesimal(xi, "conv_exp");
  LinearMap<S> out = LinearMap<S>::unit(x.window());
  LinearMap<S> power = out;
  for (std::size_t k = 1; k <= x.window().max_len(); ++k) {
    power = convolution_product(power, x);
    out += S(Rational(1) / factorial(static_cast<unsigned>(k))) * power;
  }
  return out.with_kind(MapKind::character);
}

/// log⋆(φ) = Σ_{k≥1} ((−1)^{k+1}/k)(φ − e)^{⋆k}.
template <Field S>
LinearMap<S> conv_log(const LinearMap<S>& phi) {
  const LinearMap<S> chi = require_character(phi, "conv_log");
  const LinearMap<S> e = LinearMap<S>::unit(chi.window());
  const LinearMap<S> delta = chi - e;
  LinearMap<S> out = LinearMap<S>::zero(chi.window());
  LinearMap<S> power = e;
  for (std::size_t k = 1; k <= chi.window().max_len(); ++k) {
    power = convolution_product(power, delta);
    out += S(Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k))) * power;
  }
  return out.with_kind(MapKind::infinitesimal);
}

/// Restriction to the non-singular window words.
template <Field S>
std::map<Word, S> restrict_to_n(const LinearMap<S>& f) {
  std::map<Word, S> out;
  for (const Word& w : non_singular_words(f.window())) out.emplace(w, f(w));
  return out;
}

/// φ is a character vanishing on N ∩ window.
template <Field S>
bool is_transfer(const LinearMap<S>& phi) {
  for (const Word& w : non_singular_words(phi.window()))
    if (!phi(w).is_zero()) return false;
  return true;
}

/// A character vanishing on every non-singular window word.
template <Field S>
class TransferElement {
 public:
  /// Throws DomainError unless phi is a character with phi|_N = 0.
  explicit TransferElement(const LinearMap<S>& phi) : map_(require_character(phi, "transfer element")) {
    if (!is_transfer(map_)) throw DomainError("character does not vanish on the non-singular words");
  }

  static TransferElement unit(const Window& window) { return TransferElement(LinearMap<S>::unit(window)); }

  const LinearMap<S>& map() const { return map_; }
  const Window& window() const { return map_.window(); }
  friend bool operator==(const TransferElement& a, const TransferElement& b) { return a.map_ == b.map_; }

 private:
  LinearMap<S> map_;
};

/// (φ, α) ↦ φ⋆α.
template <Field S>
LinearMap<S> act(const TransferElement<S>& phi, const LinearMap<S>& alpha) {
  return convolution_product(phi.map(), require_character(alpha, "act"));
}

/// The unique transfer element carrying β to α: α ⋆ β⁻¹.
template <Field S>
TransferElement<S> transfer_between(const LinearMap<S>& alpha, const LinearMap<S>& beta) {
  alpha.require_same_window(beta);
  const LinearMap<S> a = require_character(alpha, "transfer_between");
  const LinearMap<S> b = require_character(beta, "transfer_between");
  for (const Word& w : non_singular_words(a.window()))
    if (a(w) != b(w))
      throw RestrictionMismatch("characters differ on non-singular word " + w.str() + ": " + a(w).str() + " vs " +
                                b(w).str());
  TransferElement<S> phi(convolution_product(a, conv_inverse(b)));
  if (!(act(phi, b) == a)) throw std::logic_error("transfer_between: act(result, beta) != alpha");
  return phi;
}

/// Words in the support of π₁(w) over the nonempty window words: the
/// domain a λ must be given on for λ∘π₁ to be tabulated on the window.
template <Field S>
std::set<Word> eulerian_support(const Window& window) {
  std::set<Word> out;
  for (const Word& w : window.enumerate())
    for (const auto& [u, c] : eulerian_pi1<S>(w)) out.insert(u);
  return out;
}

/// ξ = λ∘π₁ tabulated on the window; λ is read as 0 off its table.
template <Field S>
LinearMap<S> infinitesimal_from(const Window& window, const std::map<Word, S>& lambda) {
  return LinearMap<S>::tabulate(
      window,
      [&](const Word& w) {
        S acc(0);
        for (const auto& [u, c] : eulerian_pi1<S>(w))
          if (auto it = lambda.find(u); it != lambda.end()) acc += c * it->second;
        return acc;
      },
      MapKind::infinitesimal);
}

/// Character exp⋆(λ∘π₁) whose values on the given nonempty window words match
/// `constraints`. λ is solved length by length by exact elimination, free
/// unknowns set to 0; raises InfeasibleWithinWindow naming the first
/// inconsistent constraint.
template <Field S>
LinearMap<S> fit_character_constrained(const std::map<Word, S>& constraints, const Window& window) {
  for (const auto& [w, c] : constraints) {
    if (w.empty()) throw DomainError("the unit is not a free constraint");
    if (!window.contains(w)) throw OutOfWindow(w.str(), "fit constraint");
  }
  std::map<Word, S> lambda;
  std::map<Word, S> xi{{Word{}, S(0)}};

  for (std::size_t len = 1; len <= window.max_len(); ++len) {
    const std::vector<Word> words = window.words_of_length(len);
    Echelon<Word, S> system;
    for (const Word& w : words) {
      auto target = constraints.find(w);
      if (target == constraints.end()) continue;
      // α(w) − ξ(w): the k ≥ 2 terms of the exponential, fixed by shorter words.
      S rhs = target->second;
      for (std::size_t k = 2; k <= len; ++k) {
        const S inv = S(Rational(1) / factorial(static_cast<unsigned>(k)));
        for (const auto& pieces : iterated_reduced_coproduct(w, k - 1)) {
          S prod(1);
          for (const Word& p : pieces) prod *= xi.at(p);
          rhs -= inv * prod;
        }
      }
      SparseVector<Word, S> row;
      for (const auto& [u, c] : eulerian_pi1<S>(w)) {
        if (auto it = lambda.find(u); it != lambda.end()) {
          rhs -= c * it->second;
        } else {
          row.emplace(u, c);
        }
      }
      auto red = system.insert(row, rhs);
      if (red.remainder.empty() && !red.rhs.is_zero())
        throw InfeasibleWithinWindow("no character on window " + window.str() + " satisfies the constraint at " +
                                     w.str() + " given the shorter ones");
    }
    for (const auto& [pivot, row] : system.rows()) lambda.emplace(pivot, row.rhs);
    for (const Word& w : words)
      for (const auto& [u, c] : eulerian_pi1<S>(w)) lambda.try_emplace(u, S(0));
    for (const Word& w : words) {
      S acc(0);
      for (const auto& [u, c] : eulerian_pi1<S>(w)) acc += c * lambda.at(u);
      xi.emplace(w, acc);
    }
  }
  return conv_exp(LinearMap<S>(window, std::move(xi), MapKind::infinitesimal));
}

/// A character α with α|_{N∩window} = ζ_table. The table must cover exactly
/// the non-singular window words.
template <Field S>
LinearMap<S> fit_character(const std::map<Word, S>& zeta_table, const Window& window) {
  const std::vector<Word> n_words = non_singular_words(window);
  for (const Word& w : n_words)
    if (!zeta_table.contains(w)) throw DomainError("zeta table is missing non-singular word " + w.str());
  if (zeta_table.size() != n_words.size()) {
    for (const auto& [w, c] : zeta_table)
      if (!window.contains(w) || w.empty() || !is_non_singular(w))
        throw DomainError("zeta table entry " + w.str() + " is not a non-singular window word");
  }
  return fit_character_constrained(zeta_table, window);
}

namespace detail {

// Small-height rationals: numerator in [−9, 9], denominator in [1, 9], drawn
// from mt19937_64 by plain reduction so the stream is platform independent.
template <Field S>
S draw_small_rational(std::mt19937_64& gen) {
  const long num = static_cast<long>(gen() % 19) - 9;
  const long den = static_cast<long>(gen() % 9) + 1;
  return S(Rational(num, den));
}

}  // namespace detail

/// exp⋆(λ∘π₁) with λ drawn at random on the Eulerian support: a character
/// with generic values, deterministic per seed.
template <Field S>
LinearMap<S> sample_character(const Window& window, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::map<Word, S> lambda;
  for (const Word& u : eulerian_support<S>(window)) lambda.emplace(u, detail::draw_small_rational<S>(gen));
  return conv_exp(infinitesimal_from(window, lambda));
}

/// exp⋆(λ∘π₁) for a seeded pseudo-random λ solving (λ∘π₁)(w) = 0 on every
/// non-singular window word. Throws DegenerateWindow when every such ξ is
/// zero on the window.
template <Field S>
TransferElement<S> sample_transfer(const Window& window, std::uint64_t seed) {
  Echelon<Word, S> system;
  for (const Word& w : non_singular_words(window)) {
    const Element<S>& p = eulerian_pi1<S>(w);
    system.insert(SparseVector<Word, S>(p.terms().begin(), p.terms().end()));
  }
  std::vector<Word> free_columns;
  for (const Word& u : eulerian_support<S>(window))
    if (!system.is_pivot(u)) free_columns.push_back(u);

  auto solve = [&](const std::map<Word, S>& free_values) {
    std::map<Word, S> lambda = free_values;
    for (const auto& [pivot, row] : system.rows()) {
      S v(0);
      for (const auto& [u, c] : row.vec)
        if (u != pivot)
          if (auto it = free_values.find(u); it != free_values.end()) v -= c * it->second;
      lambda.emplace(pivot, v);
    }
    return infinitesimal_from(window, lambda);
  };
  auto is_zero_map = [](const LinearMap<S>& f) {
    for (const auto& [w, c] : f.table())
      if (!c.is_zero()) return false;
    return true;
  };

  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::map<Word, S> values;
    for (const Word& u : free_columns) values.emplace(u, detail::draw_small_rational<S>(gen));
    LinearMap<S> xi = solve(values);
    if (!is_zero_map(xi)) return TransferElement<S>(conv_exp(xi));
  }
  for (const Word& u : free_columns)
    if (!is_zero_map(solve({{u, S(1)}})))
      throw std::logic_error("sample_transfer: random draws repeatedly hit the zero direction");
  throw DegenerateWindow("the transfer group is trivial on window " + window.str());
}

}  // namespace qsh
