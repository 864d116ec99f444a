#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsh/characters.hpp"
#include "qsh/coideal.hpp"
#include "qsh/errors.hpp"
#include "qsh/eulerian.hpp"
#include "qsh/fixtures.hpp"
#include "qsh/hopf.hpp"
#include "qsh/isomorphism.hpp"
#include "qsh/ratfun.hpp"
#include "qsh/rational.hpp"
#include "qsh/text.hpp"
#include "qsh/window.hpp"

namespace qsh::cli {

namespace {

using Json = nlohmann::ordered_json;
using Q = Rational;
using Qt = RationalFunction;

const std::set<std::string> kValueOptions{"--letters", "--max-len", "--alphabet",    "--scalar", "--in",
                                          "--out",     "--seed",    "--composition", "--depth",
                                          "--scheme"};
const std::set<std::string> kGroups{"char", "scheme"};
constexpr std::size_t kMany = static_cast<std::size_t>(-1);

/// Everything a subcommand may read. Options are bound per subcommand but
/// share these fields; `window_opts` remembers which belong to whom.
struct Options {
  std::vector<std::string> positional;
  std::vector<std::string> inputs;
  std::string out;
  std::string scalar = "Q";
  std::string letters = "-3..3";
  std::size_t max_len = 3;
  std::string alphabet = "all";
  std::optional<std::uint64_t> seed;
  std::string composition;
  std::string scheme;
  int depth = 0;
  bool right = false;
  bool reduced = false;
  bool shuffle = false;
  bool bracket = false;
  bool json = false;
  bool antipode = false;
  bool infinitesimal = false;
  bool character = false;
  bool strict_antipode = false;
  std::map<const CLI::App*, std::vector<CLI::Option*>> window_opts;
  /// Accepted positional counts per subcommand.
  std::map<const CLI::App*, std::pair<std::size_t, std::size_t>> arity;
  std::map<const CLI::App*, std::string> usage;
};

class Usage : public Error {
 public:
  using Error::Error;
};

Window make_window(const Options& o) {
  const auto [lo, hi] = parse_letter_range(o.letters);
  return Window(lo, hi, o.max_len, parse_alphabet(o.alphabet));
}

bool window_given(const Options& o, const CLI::App* app) {
  auto it = o.window_opts.find(app);
  if (it == o.window_opts.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(), [](const CLI::Option* opt) { return opt->count() > 0; });
}

std::uint64_t seed_of(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("QSH_SEED")) {
    const std::string text(env);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Usage("QSH_SEED must be a nonnegative integer, got '" + text + "'");
    return std::stoull(text);
  }
  return 0;
}

bool is_qt(const Options& o) {
  if (o.scalar == "Q") return false;
  if (o.scalar == "Qt") return true;
  throw Usage("--scalar must be Q or Qt, got '" + o.scalar + "'");
}

// ---- character files ----

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot open '" + path + "'");
  return in;
}

std::string file_scalar(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_char_header(in).scalar;
}

template <Field S>
LinearMap<S> load_map(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_char_file<S>(in);
}

template <Field S>
void emit_map(const Options& o, const LinearMap<S>& f, std::ostream& out) {
  if (o.out.empty()) {
    write_char_file(out, f);
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw Usage("cannot write '" + o.out + "'");
  write_char_file(file, f);
}

void require_inputs(const Options& o, std::size_t n, const std::string& what) {
  if (o.inputs.size() != n) throw Usage(what + " needs exactly " + std::to_string(n) + " --in file(s)");
}

/// The shared scalar of the --in files.
bool inputs_are_qt(const Options& o) {
  const std::string first = file_scalar(o.inputs.front());
  for (const auto& path : o.inputs)
    if (file_scalar(path) != first) throw Usage("--in files mix scalar fields");
  return first == "Qt";
}

// ---- element commands ----

template <Field S>
Element<S> element_arg(const Options& o, std::size_t i) {
  return parse_element<S>(o.positional.at(i));
}

template <Field S>
int cmd_mul(const Options& o, std::ostream& out, bool shuffle_product) {
  const Element<S> x = element_arg<S>(o, 0);
  const Element<S> y = element_arg<S>(o, 1);
  out << print_element(shuffle_product ? shuffle_elem(x, y) : quasi_shuffle_elem(x, y)) << '\n';
  return kSuccess;
}

template <Field S>
int cmd_coprod(const Options& o, std::ostream& out) {
  const Element<S> x = element_arg<S>(o, 0);
  if (!o.reduced) {
    out << print_tensor(coproduct(x)) << '\n';
    return kSuccess;
  }
  TensorElement<S> t;
  for (const auto& [w, c] : x)
    for (const auto& [k, d] : reduced_coproduct<S>(w)) t.add(k.first, k.second, c * d);
  out << print_tensor(t) << '\n';
  return kSuccess;
}

template <Field S>
int cmd_antipode(const Options& o, std::ostream& out) {
  const Element<S> x = element_arg<S>(o, 0);
  const Element<S> s =
      o.right ? x.map_linear([](const Word& w) { return antipode_right<S>(w); }) : antipode(x);
  out << print_element(s) << '\n';
  return kSuccess;
}

template <Field S>
int cmd_hoffman(const Options& o, std::ostream& out, bool log) {
  const Element<S> x = element_arg<S>(o, 0);
  out << print_element(log ? hoffman_log(x) : hoffman_exp(x)) << '\n';
  return kSuccess;
}

template <Field S>
int cmd_pi1(const Options& o, std::ostream& out) {
  const Element<S> x = element_arg<S>(o, 0);
  if (o.bracket && !o.shuffle) throw Usage("--bracket needs --shuffle");
  const Element<S> p = o.shuffle ? eulerian_pi1_shuffle(x) : eulerian_pi1(x);
  if (o.bracket) {
    out << LieElement2<S>::from_depth2(p).str() << '\n';
  } else {
    out << print_element(p) << '\n';
  }
  return kSuccess;
}

template <Field S>
int cmd_member(const Options& o, std::ostream& out) {
  const Element<S> x = element_arg<S>(o, 0);
  const auto result = ideal_membership(x, make_window(o));
  out << "member\t" << (result.member ? "true" : "false") << '\n';
  for (const auto& [g, c] : result.certificate)
    out << c.str() << '\t' << g.non_singular.str() << '\t' << g.multiplier.str() << '\n';
  return kSuccess;
}

const char* condition_label(int c) {
  switch (c) {
    case 1: return "(i)";
    case 2: return "(ii)";
    default: return "(iii)";
  }
}

int cmd_singular(const Options& o, std::ostream& out) {
  for (const auto& text : o.positional) {
    const Word w = Word::parse(text);
    const int c = violated_condition(w);
    out << w.str() << '\t';
    if (c == 0) {
      out << "non-singular\n";
    } else {
      out << "singular\t" << condition_label(c) << '\n';
    }
  }
  return kSuccess;
}

Composition parse_composition(const std::string& text) {
  std::vector<std::size_t> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string piece = text.substr(pos, comma - pos);
    if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError(pos, "composition parts must be positive integers separated by ','");
    parts.push_back(std::stoul(piece));
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

int cmd_contract(const Options& o, std::ostream& out) {
  const Word w = Word::parse(o.positional.at(0));
  if (!o.composition.empty()) {
    out << contract_along(w, parse_composition(o.composition)).str() << '\n';
    return kSuccess;
  }
  for (const Word& c : contractions_one_block(w)) out << c.str() << '\n';
  return kSuccess;
}

int cmd_nbasis(const Options& o, std::ostream& out) {
  const auto basis = n_basis(make_window(o));
  out << "dimension\t" << basis.dimension() << '\n';
  for (const Word& w : basis.pivots()) out << w.str() << '\n';
  return kSuccess;
}

int cmd_prefix_check(const Options& o, std::ostream& out) {
  const Window window = make_window(o);
  int code = kSuccess;
  if (auto w = prefix_closure_counterexample(window)) {
    out << "prefix-closure\tfail\t" << w->str() << '\n';
    code = kAssertionFailed;
  } else {
    out << "prefix-closure\tpass\n";
  }
  if (auto p = contraction_closure_counterexample(window)) {
    out << "contraction-closure\tfail\t" << p->first.str() << " -> " << p->second.str() << '\n';
    code = kAssertionFailed;
  } else {
    out << "contraction-closure\tpass\n";
  }
  return code;
}

// ---- W dimensions ----

std::string bracket_name(const Word& w) {
  if (w.size() == 1) return "z_" + std::to_string(w[0]);
  return "[z_" + std::to_string(w[0]) + ",z_" + std::to_string(w[1]) + "]";
}

std::string join_brackets(const std::vector<Word>& ws) {
  if (ws.empty()) return "-";
  std::string s;
  for (const Word& w : ws) s += (s.empty() ? "" : " ") + bracket_name(w);
  return s;
}

Json bracket_list(const std::vector<Word>& ws) {
  Json a = Json::array();
  for (const Word& w : ws) a.push_back(bracket_name(w));
  return a;
}

int cmd_wdim(const Options& o, std::ostream& out) {
  const Window window = make_window(o);
  if (o.depth != 1 && o.depth != 2) throw Usage("--depth must be 1 or 2");
  const WDimension d = w_dimension(o.depth, window);
  std::optional<W2Diff> diff;
  std::vector<Word> candidates;
  if (o.depth == 2) {
    diff = w2_diff(window);
    candidates = w2_candidate_basis(window);
  }
  if (o.json) {
    Json j;
    j["depth"] = o.depth;
    j["window"] = window.str();
    j["ambient"] = d.ambient;
    j["dimension"] = d.dimension;
    j["basis"] = bracket_list(d.basis);
    if (diff) {
      j["candidate_set"] = bracket_list(candidates);
      j["common"] = bracket_list(diff->common);
      j["candidate_only"] = bracket_list(diff->candidate_only);
      j["computed_only"] = bracket_list(diff->computed_only);
    }
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  auto row = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(16) << key << value << '\n';
  };
  row("depth", std::to_string(o.depth));
  row("window", window.str());
  row("ambient", std::to_string(d.ambient));
  row("dimension", std::to_string(d.dimension));
  row("basis", join_brackets(d.basis));
  if (diff) {
    row("candidate-set", join_brackets(candidates));
    row("common", join_brackets(diff->common));
    row("candidate-only", join_brackets(diff->candidate_only));
    row("computed-only", join_brackets(diff->computed_only));
  }
  return kSuccess;
}

// ---- characters ----

template <Field S>
std::map<Word, S> depth1_constraints(const Window& window) {
  std::map<Word, S> c;
  for (Letter k : window.letters()) c.emplace(Word{k}, S(fixtures::zeta_depth1(k)));
  return c;
}

template <Field S>
fixtures::SchemeTable<S> scheme_table_for(const std::string& name);

template <>
fixtures::SchemeTable<Q> scheme_table_for<Q>(const std::string& name) {
  if (name == "EMS_t") throw Usage("scheme EMS_t takes values in Qt; pass --scalar Qt");
  return fixtures::scheme_table(fixtures::parse_scheme(name));
}

template <>
fixtures::SchemeTable<Qt> scheme_table_for<Qt>(const std::string& name) {
  if (name == "EMS_t") return fixtures::ems_t_table();
  const auto t = fixtures::scheme_table(fixtures::parse_scheme(name));
  fixtures::SchemeTable<Qt> out{t.name, t.alphabet, {}};
  for (const auto& [w, e] : t.entries) out.entries.emplace(w, fixtures::SchemeEntry<Qt>{Qt(e.value), e.provenance});
  return out;
}

/// The scheme's tabulated values inside the window, fitted to a character.
template <Field S>
LinearMap<S> scheme_character(const std::string& name, const Window& window) {
  const auto table = scheme_table_for<S>(name);
  std::map<Word, S> constraints;
  for (const auto& [w, e] : table.entries)
    if (window.contains(w) && !(e.provenance == fixtures::Provenance::forced)) constraints.emplace(w, e.value);
  LinearMap<S> alpha = fit_character_constrained(constraints, window);
  for (const auto& [w, e] : table.entries)
    if (window.contains(w) && alpha(w) != e.value)
      throw std::logic_error("fitted scheme character disagrees with the table at " + w.str());
  return alpha;
}

const Window kSchemeWindow(-4, -1, 2, Alphabet::negative);

template <Field S>
int cmd_char(const std::string& sub, const Options& o, const CLI::App* app, std::ostream& out) {
  if (sub == "check") {
    require_inputs(o, 1, "char check");
    const LinearMap<S> f = load_map<S>(o.inputs[0]);
    const bool ok = o.infinitesimal ? check_infinitesimal(f) : check_character(f);
    out << (o.infinitesimal ? "infinitesimal\t" : "character\t") << (ok ? "true" : "false") << '\n';
    return ok ? kSuccess : kAssertionFailed;
  }
  if (sub == "conv") {
    require_inputs(o, 2, "char conv");
    emit_map(o, convolution_product(load_map<S>(o.inputs[0]), load_map<S>(o.inputs[1])), out);
    return kSuccess;
  }
  if (sub == "inv") {
    require_inputs(o, 1, "char inv");
    const LinearMap<S> f = load_map<S>(o.inputs[0]);
    emit_map(o, o.antipode ? char_inverse(f) : conv_inverse(f), out);
    return kSuccess;
  }
  if (sub == "exp") {
    require_inputs(o, 1, "char exp");
    emit_map(o, conv_exp(load_map<S>(o.inputs[0])), out);
    return kSuccess;
  }
  if (sub == "log") {
    require_inputs(o, 1, "char log");
    emit_map(o, conv_log(load_map<S>(o.inputs[0])), out);
    return kSuccess;
  }
  if (sub == "fit") {
    if (o.inputs.size() > 1) throw Usage("char fit takes at most one --in file");
    if (!o.inputs.empty() && !o.scheme.empty()) throw Usage("char fit takes --in or --scheme, not both");
    if (!o.scheme.empty()) {
      emit_map(o, scheme_character<S>(o.scheme, window_given(o, app) ? make_window(o) : kSchemeWindow), out);
      return kSuccess;
    }
    const Window window = make_window(o);
    if (o.inputs.empty()) {
      emit_map(o, fit_character_constrained(depth1_constraints<S>(window), window), out);
      return kSuccess;
    }
    std::ifstream in = open_input(o.inputs[0]);
    const CharFileHeader header = read_char_header(in);
    auto body = read_char_body<S>(in, header, false);
    emit_map(o, fit_character(body.entries, body.window), out);
    return kSuccess;
  }
  if (sub == "sample") {
    emit_map(o, sample_transfer<S>(make_window(o), seed_of(o)).map(), out);
    return kSuccess;
  }
  if (sub == "transfer-between") {
    require_inputs(o, 2, "char transfer-between");
    emit_map(o, transfer_between(load_map<S>(o.inputs[0]), load_map<S>(o.inputs[1])).map(), out);
    return kSuccess;
  }
  if (sub == "act") {
    require_inputs(o, 2, "char act");
    const TransferElement<S> phi(load_map<S>(o.inputs[0]));
    emit_map(o, act(phi, load_map<S>(o.inputs[1])), out);
    return kSuccess;
  }
  throw Usage("unknown char subcommand '" + sub + "'");
}

template <Field S>
int cmd_scheme_show(const Options& o, const CLI::App* app, std::ostream& out) {
  const std::string& name = o.positional.at(0);
  if (o.character) {
    emit_map(o, scheme_character<S>(name, window_given(o, app) ? make_window(o) : kSchemeWindow), out);
    return kSuccess;
  }
  const auto table = scheme_table_for<S>(name);
  out << "#scheme " << table.name << " alphabet " << to_string(table.alphabet) << '\n';
  for (const auto& [w, e] : table.entries)
    out << w.str() << '\t' << e.value.str() << '\t' << fixtures::to_string(e.provenance) << '\n';
  return kSuccess;
}

template <Field S>
int cmd_scheme_partner(const Options& o, std::ostream& out) {
  out << fixtures::forced_partner(ScalarTraits<S>::parse(o.positional.at(0))).str() << '\n';
  return kSuccess;
}

// ---- verify ----

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

class Verifier {
 public:
  Verifier(Window window, std::uint64_t seed, bool strict) : window_(std::move(window)), seed_(seed), strict_(strict) {}

  std::vector<PropertyResult> run() {
    check("prefix-closure", [&]() -> std::string {
      if (auto w = prefix_closure_counterexample(window_)) return "singular prefix in " + w->str();
      return {};
    });
    check("contraction-closure", [&]() -> std::string {
      if (auto p = contraction_closure_counterexample(window_)) return p->first.str() + " contracts to " + p->second.str();
      return {};
    });
    check("antipode-recursions", [&]() -> std::string {
      for (const Word& w : words_)
        if (antipode<Q>(w) != antipode_right<Q>(w)) return "left and right recursions differ at " + w.str();
      return {};
    });
    check("antipode-axiom", [&]() -> std::string {
      for (const Word& w : words_) {
        Element<Q> left, right;
        for (std::size_t i = 0; i <= w.size(); ++i) {
          left += quasi_shuffle_elem(antipode<Q>(w.prefix(i)), Element<Q>(w.suffix_from(i)));
          right += quasi_shuffle_elem(Element<Q>(w.prefix(i)), antipode<Q>(w.suffix_from(i)));
        }
        const Element<Q> expected = w.empty() ? Element<Q>::unit() : Element<Q>();
        if (left != expected || right != expected) return "S*id != u.eps at " + w.str();
      }
      return {};
    });
    check("bialgebra", [&]() -> std::string {
      std::string bad;
      for_pairs([&](const Word& u, const Word& v) {
        const auto lhs = coproduct(quasi_shuffle<Q>(u, v));
        const auto rhs = tensor_product(coproduct<Q>(u), coproduct<Q>(v), quasi_shuffle_counts);
        if (lhs != rhs) bad = "coproduct not multiplicative on " + u.str() + ", " + v.str();
        return bad.empty();
      });
      return bad;
    });
    check("eulerian-idempotent", [&]() -> std::string {
      for (const Word& w : words_) {
        const Element<Q>& p = eulerian_pi1<Q>(w);
        if (eulerian_pi1(p) != p) return "pi1 not idempotent at " + w.str();
      }
      std::string bad;
      for_pairs([&](const Word& u, const Word& v) {
        if (!eulerian_pi1(quasi_shuffle<Q>(u, v)).is_zero()) bad = "pi1 does not kill " + u.str() + "*" + v.str();
        return bad.empty();
      });
      return bad;
    });
    check("hoffman-morphism", [&]() -> std::string {
      if (auto f = hoffman_morphism_counterexample(window_)) return f->what + " at " + f->u.str() + " " + f->v.str();
      return {};
    });
    check("log-preserves-N", [&]() -> std::string {
      if (auto w = log_preserves_n_counterexample(window_)) return "Hoffman image of " + w->str() + " leaves N";
      return {};
    });
    check("character-group", [&]() -> std::string {
      const LinearMap<Q> phi = sample_character<Q>(window_, seed_);
      const LinearMap<Q> inv = inverse(phi);
      if (!(convolution_product(phi, inv) == LinearMap<Q>::unit(window_))) return "phi * phi^-1 != e";
      if (!check_character(inv)) return "inverse is not a character";
      for (const Word& w : antipode_closed_words<Q>(window_))
        if (eval(phi, antipode<Q>(w)) != inv(w)) return "inverse differs from phi o S at " + w.str();
      return {};
    });
    check("transfer-closure", [&]() -> std::string {
      if (!sampled()) return {};
      const LinearMap<Q> prod = convolution_product(phi_->map(), inverse(psi_->map()));
      if (!check_character(prod)) return "phi * psi^-1 is not a character";
      if (!is_transfer(prod)) return "phi * psi^-1 does not vanish on N";
      return {};
    });
    check("quotient-characters", [&]() -> std::string {
      if (!sampled()) return {};
      for (const IdealGenerator& g : ideal_generators(window_))
        if (!eval(phi_->map(), quasi_shuffle<Q>(g.non_singular, g.multiplier)).is_zero())
          return "transfer element is nonzero on " + g.non_singular.str() + "*" + g.multiplier.str();
      return {};
    });
    check("action-restriction", [&]() -> std::string {
      if (!sampled()) return {};
      if (restrict_to_n(act(*phi_, alpha())) != restrict_to_n(alpha())) return "act(phi, alpha) changes alpha on N";
      return {};
    });
    check("action-free-transitive", [&]() -> std::string {
      if (!sampled()) return {};
      const LinearMap<Q> moved = act(*phi_, alpha());
      if (!(transfer_between(moved, alpha()) == *phi_)) return "transfer_between(act(phi, alpha), alpha) != phi";
      if (moved == alpha()) return "a nontrivial transfer element fixes alpha";
      return {};
    });
    check("w1-dimension", [&]() -> std::string {
      const WDimension d = w_dimension(1, window_);
      const std::vector<Word> expected = window_.contains_letter(1) ? std::vector<Word>{Word{1}} : std::vector<Word>{};
      if (d.basis != expected) return "basis " + join_brackets(d.basis) + ", expected " + join_brackets(expected);
      return {};
    });
    if (window_.max_len() >= 2)
      check("w2-dimension", [&]() -> std::string {
        std::size_t pairs = 0;
        for (Letter k : window_.letters())
          for (Letter l : window_.letters())
            if (k > l && !is_non_singular(Word{k, l}) && !is_non_singular(Word{l, k})) ++pairs;
        const WDimension d = w_dimension(2, window_);
        if (d.dimension != pairs)
          return "dimension " + std::to_string(d.dimension) + ", pair count " + std::to_string(pairs);
        return {};
      });
    return results_;
  }

 private:
  template <class F>
  void check(const std::string& name, F&& body) {
    try {
      std::string failure = body();
      if (failure.empty()) {
        results_.push_back({name, true, note_});
      } else {
        results_.push_back({name, false, failure});
      }
    } catch (const OutOfWindow&) {
      throw;
    } catch (const std::exception& e) {
      results_.push_back({name, false, e.what()});
    }
    note_.clear();
  }

  template <class F>
  void for_pairs(F&& visit) {
    for (std::size_t i = 1; i < words_.size(); ++i)
      for (std::size_t j = i; j < words_.size(); ++j) {
        if (words_[i].size() + words_[j].size() > window_.max_len()) continue;
        if (!visit(words_[i], words_[j])) return;
      }
  }

  LinearMap<Q> inverse(const LinearMap<Q>& f) const { return strict_ ? char_inverse(f) : conv_inverse(f); }

  /// Two seeded transfer elements; false (with a note) when the group is trivial here.
  bool sampled() {
    if (!phi_) {
      try {
        phi_ = sample_transfer<Q>(window_, seed_);
        psi_ = sample_transfer<Q>(window_, seed_ + 1);
      } catch (const DegenerateWindow&) {
        trivial_ = true;
      }
    }
    if (trivial_) note_ = "vacuous: the transfer group is trivial on this window";
    return !trivial_;
  }

  /// Analytic depth-1 values when every letter is nonpositive, otherwise a
  /// seeded generic character.
  const LinearMap<Q>& alpha() {
    if (!alpha_) {
      if (window_.letter_max() <= 0) {
        const LinearMap<Q> base = fit_character_constrained(depth1_constraints<Q>(window_), window_);
        alpha_ = fit_character(restrict_to_n(base), window_);
      } else {
        alpha_ = sample_character<Q>(window_, seed_ + 2);
      }
    }
    return *alpha_;
  }

  Window window_;
  std::uint64_t seed_;
  bool strict_;
  std::vector<Word> words_ = window_.enumerate();
  std::vector<PropertyResult> results_;
  std::string note_;
  std::optional<TransferElement<Q>> phi_, psi_;
  std::optional<LinearMap<Q>> alpha_;
  bool trivial_ = false;
};

int cmd_verify(const Options& o, std::ostream& out) {
  const Window window = make_window(o);
  const std::uint64_t seed = seed_of(o);
  const auto results = Verifier(window, seed, o.strict_antipode).run();
  const auto passed = static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](auto& r) { return r.pass; }));
  if (o.json) {
    Json j;
    j["window"] = window.str();
    j["seed"] = seed;
    j["strict_antipode"] = o.strict_antipode;
    Json props = Json::array();
    for (const auto& r : results) {
      Json p;
      p["name"] = r.name;
      p["status"] = r.pass ? "pass" : "fail";
      if (!r.detail.empty()) p["detail"] = r.detail;
      props.push_back(p);
    }
    j["properties"] = props;
    j["passed"] = passed;
    j["total"] = results.size();
    out << j.dump(2) << '\n';
  } else {
    out << "window\t" << window.str() << '\n' << "seed\t" << seed << '\n';
    for (const auto& r : results) {
      out << (r.pass ? "pass" : "FAIL") << '\t' << r.name;
      if (!r.detail.empty()) out << '\t' << r.detail;
      out << '\n';
    }
    out << passed << '/' << results.size() << " properties passed\n";
  }
  return passed == results.size() ? kSuccess : kAssertionFailed;
}

// ---- wiring ----

void add_window(CLI::App* app, Options& o) {
  auto& opts = o.window_opts[app];
  opts.push_back(app->add_option("--letters", o.letters, "letter range MIN..MAX")->capture_default_str());
  opts.push_back(app->add_option("--max-len", o.max_len, "maximum word length")->capture_default_str());
  opts.push_back(app->add_option("--alphabet", o.alphabet, "all | nonpositive | negative")->capture_default_str());
}

void add_scalar(CLI::App* app, Options& o) {
  app->add_option("--scalar", o.scalar, "coefficient field: Q or Qt")->capture_default_str();
}

// Positionals bypass CLI11 (which would read "[1,2]" as a list literal);
// they are counted here and named in the usage line.
void positionals(CLI::App* sub, Options& o, const std::string& path, const std::string& names, std::size_t min,
                 std::size_t max) {
  o.arity[sub] = {min, max};
  o.usage[sub] = "qsh " + path + " [OPTIONS] " + names;
  sub->usage(o.usage[sub]);
}

CLI::App* element_command(CLI::App& app, Options& o, const std::string& name, const std::string& help, int count) {
  CLI::App* sub = app.add_subcommand(name, help);
  positionals(sub, o, name, count == 1 ? "ELEMENT" : "ELEMENT ELEMENT", count, count);
  add_scalar(sub, o);
  return sub;
}

template <class F>
int with_scalar(bool qt, F&& f) {
  return qt ? f(Qt{}) : f(Q{});
}

}  // namespace

SplitArgs split_args(const std::vector<std::string>& args) {
  SplitArgs out;
  std::size_t i = 0;
  if (i < args.size() && args[i].rfind("-", 0) != 0) {
    out.command.push_back(args[i++]);
    if (kGroups.contains(out.command.front()) && i < args.size() && args[i].rfind("-", 0) != 0)
      out.command.push_back(args[i++]);
  }
  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--") {
      out.positional.insert(out.positional.end(), args.begin() + static_cast<std::ptrdiff_t>(i) + 1, args.end());
      break;
    }
    if (kValueOptions.contains(a) && i + 1 < args.size()) {
      out.command.push_back(a + "=" + args[++i]);
    } else if (a.rfind("--", 0) == 0 || a == "-h") {
      out.command.push_back(a);
    } else {
      out.positional.push_back(a);
    }
  }
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact quasi-shuffle Hopf algebra workbench", "qsh"};
  app.require_subcommand(1);

  auto* mul = element_command(app, o, "mul", "quasi-shuffle product of two elements", 2);
  auto* shuffle_mul = element_command(app, o, "shuffle-mul", "shuffle product of two elements", 2);
  auto* coprod = element_command(app, o, "coprod", "deconcatenation coproduct", 1);
  coprod->add_flag("--reduced", o.reduced, "drop the two trivial splittings");
  auto* antipode_cmd = element_command(app, o, "antipode", "antipode", 1);
  antipode_cmd->add_flag("--right", o.right, "use the right-handed recursion");
  auto* hlog = element_command(app, o, "hlog", "Hoffman logarithm", 1);
  auto* hexp = element_command(app, o, "hexp", "Hoffman exponential", 1);
  auto* pi1 = element_command(app, o, "pi1", "Eulerian idempotent", 1);
  pi1->add_flag("--shuffle", o.shuffle, "idempotent of the shuffle algebra");
  pi1->add_flag("--bracket", o.bracket, "print a depth-2 result as brackets");
  auto* member = element_command(app, o, "member", "membership in the ideal generated by N, within the window", 1);
  add_window(member, o);

  auto* singular = app.add_subcommand("singular", "classify words");
  positionals(singular, o, "singular", "WORD...", 1, kMany);
  auto* contract = app.add_subcommand("contract", "contractions of a word");
  positionals(contract, o, "contract", "WORD", 1, 1);
  contract->add_option("--composition", o.composition, "block sizes, e.g. 2,1");
  auto* nbasis = app.add_subcommand("nbasis", "basis of N on a window");
  add_window(nbasis, o);
  auto* prefix_check = app.add_subcommand("prefix-check", "prefix and contraction closure of N on a window");
  add_window(prefix_check, o);
  auto* wdim = app.add_subcommand("wdim", "dimension of a graded piece of W");
  wdim->add_option("--depth", o.depth, "1 or 2")->required();
  wdim->add_flag("--json", o.json, "JSON report");
  add_window(wdim, o);

  auto* chr = app.add_subcommand("char", "window-tabulated characters");
  chr->require_subcommand(1);
  std::map<std::string, CLI::App*> char_subs;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"check", "check the character (or infinitesimal) law"},
           {"conv", "convolution product of two maps"},
           {"inv", "convolution inverse"},
           {"exp", "convolution exponential of an infinitesimal character"},
           {"log", "convolution logarithm of a character"},
           {"fit", "character extending prescribed values"},
           {"sample", "seeded transfer element"},
           {"transfer-between", "the transfer element carrying the second character to the first"},
           {"act", "action of a transfer element on a character"}}) {
    CLI::App* sub = chr->add_subcommand(name, help);
    sub->add_option("--in", o.inputs, "input character file")->allow_extra_args(false);
    sub->add_option("--out", o.out, "output file (default: stdout)");
    char_subs[name] = sub;
  }
  char_subs["check"]->add_flag("--infinitesimal", o.infinitesimal, "check the infinitesimal law instead");
  char_subs["inv"]->add_flag("--antipode", o.antipode, "tabulate phi o S, refusing windows the antipode leaves");
  char_subs["fit"]->add_option("--scheme", o.scheme, "GZ | EMS | MP | EMS_t");
  add_window(char_subs["fit"], o);
  add_scalar(char_subs["fit"], o);
  add_window(char_subs["sample"], o);
  add_scalar(char_subs["sample"], o);
  char_subs["sample"]->add_option("--seed", o.seed, "seed (default: $QSH_SEED or 0)");

  auto* scheme = app.add_subcommand("scheme", "published renormalization values");
  scheme->require_subcommand(1);
  auto* show = scheme->add_subcommand("show", "tabulated values of a scheme");
  positionals(show, o, "scheme show", "GZ|EMS|MP|EMS_t", 1, 1);
  show->add_flag("--character", o.character, "emit the fitted character file");
  show->add_option("--out", o.out, "output file for --character");
  add_window(show, o);
  add_scalar(show, o);
  auto* partner = scheme->add_subcommand("partner", "value at [-3,-1] forced by the value v at [-1,-3]");
  positionals(partner, o, "scheme partner", "VALUE", 1, 1);
  add_scalar(partner, o);

  auto* verify = app.add_subcommand("verify", "run the window-scale property suite");
  add_window(verify, o);
  verify->add_option("--seed", o.seed, "seed (default: $QSH_SEED or 0)");
  verify->add_flag("--json", o.json, "JSON report");
  verify->add_flag("--strict-antipode", o.strict_antipode, "invert characters through the antipode");

  SplitArgs split = split_args(raw_args);
  std::vector<std::string> args(split.command.rbegin(), split.command.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }
  o.positional = std::move(split.positional);
  const CLI::App* leaf = &app;
  while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
  const auto [min_args, max_args] = o.arity.contains(leaf) ? o.arity.at(leaf) : std::pair<std::size_t, std::size_t>{0, 0};
  if (o.positional.size() < min_args || o.positional.size() > max_args) {
    err << "error: " << leaf->get_name() << " takes ";
    if (min_args == max_args) {
      err << min_args;
    } else if (max_args == kMany) {
      err << "at least " << min_args;
    } else {
      err << min_args << " to " << max_args;
    }
    err << " positional argument(s), got " << o.positional.size() << "\nusage: " << o.usage.at(leaf) << '\n';
    return kUsage;
  }

  try {
    if (mul->parsed()) return with_scalar(is_qt(o), [&](auto s) { return cmd_mul<decltype(s)>(o, out, false); });
    if (shuffle_mul->parsed())
      return with_scalar(is_qt(o), [&](auto s) { return cmd_mul<decltype(s)>(o, out, true); });
    if (coprod->parsed()) return with_scalar(is_qt(o), [&](auto s) { return cmd_coprod<decltype(s)>(o, out); });
    if (antipode_cmd->parsed())
      return with_scalar(is_qt(o), [&](auto s) { return cmd_antipode<decltype(s)>(o, out); });
    if (hlog->parsed()) return with_scalar(is_qt(o), [&](auto s) { return cmd_hoffman<decltype(s)>(o, out, true); });
    if (hexp->parsed()) return with_scalar(is_qt(o), [&](auto s) { return cmd_hoffman<decltype(s)>(o, out, false); });
    if (pi1->parsed()) return with_scalar(is_qt(o), [&](auto s) { return cmd_pi1<decltype(s)>(o, out); });
    if (member->parsed()) return with_scalar(is_qt(o), [&](auto s) { return cmd_member<decltype(s)>(o, out); });
    if (singular->parsed()) return cmd_singular(o, out);
    if (contract->parsed()) return cmd_contract(o, out);
    if (nbasis->parsed()) return cmd_nbasis(o, out);
    if (prefix_check->parsed()) return cmd_prefix_check(o, out);
    if (wdim->parsed()) return cmd_wdim(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (show->parsed())
      return with_scalar(is_qt(o), [&](auto s) { return cmd_scheme_show<decltype(s)>(o, show, out); });
    if (partner->parsed())
      return with_scalar(is_qt(o), [&](auto s) { return cmd_scheme_partner<decltype(s)>(o, out); });
    for (const auto& [name, sub] : char_subs) {
      if (!sub->parsed()) continue;
      const bool qt = o.inputs.empty() ? is_qt(o) : inputs_are_qt(o);
      return with_scalar(qt, [&](auto s) { return cmd_char<decltype(s)>(name, o, sub, out); });
    }
    throw Usage("no subcommand given");
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OutOfWindow& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kAssertionFailed;
  }
}

}  // namespace qsh::cli
