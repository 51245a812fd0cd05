#include "puiseux/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "puiseux/approximation.hpp"
#include "puiseux/families.hpp"
#include "puiseux/invariants.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/report_json.hpp"

namespace puiseux {

namespace {

/// Malformed flag values and missing stream sources: reported as usage
/// problems (exit 1), unlike semantic validation failures (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  // monoid / stream source
  std::string atoms_csv;
  std::string spec_path;
  std::string family;
  std::string r_text;
  std::optional<std::uint64_t> i_val;
  std::string b_csv;
  std::optional<std::uint64_t> count;
  std::string truncate_text;
  std::optional<std::uint64_t> prefix;
  // query
  std::string x_text;
  std::string bound_text;
  std::optional<std::uint64_t> n_val;
  std::uint64_t depth = 5;
  std::uint64_t window = 3;
  std::string invariant;
  bool show_factorizations = false;
  std::string format = "table";
};

Rat parse_rat_flag(const char* flag, const std::string& text) {
  try {
    return Rat::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::vector<Rat> parse_rat_list_flag(const char* flag, const std::string& csv) {
  std::vector<Rat> values;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string part = csv.substr(start, comma == std::string::npos ? comma : comma - start);
    values.push_back(parse_rat_flag(flag, part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.empty()) throw UsageError(std::string(flag) + ": empty list");
  return values;
}

Limits limits_from_env() {
  Limits limits;
  if (const char* cap = std::getenv("PUISEUX_CAP")) {
    std::string text(cap);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
        text == "0") {
      throw std::invalid_argument("PUISEUX_CAP must be a positive integer, got '" + text + "'");
    }
    limits.factorization_cap = std::stoull(text);
  }
  return limits;
}

AtomStream stream_from(const Options& o) {
  int sources = (!o.atoms_csv.empty() ? 1 : 0) + (!o.spec_path.empty() ? 1 : 0) +
                (!o.family.empty() ? 1 : 0);
  if (sources != 1) throw UsageError("give exactly one of --atoms, --spec or --family");

  if (!o.spec_path.empty()) {
    std::ifstream in(o.spec_path);
    if (!in) throw std::invalid_argument("cannot read spec file '" + o.spec_path + "'");
    Json doc = Json::parse(in);
    if (is_family_document(doc)) return make_stream(family_spec_from_json(doc));
    return explicit_stream(atoms_from_json(doc));
  }
  if (!o.family.empty()) {
    FamilySpec spec;
    spec.family = o.family;
    if (!o.r_text.empty()) spec.r = parse_rat_flag("--r", o.r_text);
    spec.i = o.i_val;
    if (!o.b_csv.empty()) spec.base_list = parse_rat_list_flag("--B", o.b_csv);
    spec.count = o.count;
    return make_stream(spec);
  }
  return explicit_stream(parse_rat_list_flag("--atoms", o.atoms_csv));
}

/// Atoms a monoid subcommand works over. Explicit --truncate-at / --prefix
/// win; a finite stream contributes everything; an infinite one defaults to
/// the exact cutoff at x for element queries and is refused otherwise.
ReducedMonoid monoid_from(const Options& o, const std::optional<Rat>& x, const Limits& limits) {
  AtomStream s = stream_from(o);
  std::vector<Rat> atoms;
  if (!o.truncate_text.empty()) {
    atoms = truncate_stream_below(s, parse_rat_flag("--truncate-at", o.truncate_text), limits);
  } else if (o.prefix) {
    if (*o.prefix == 0) throw UsageError("--prefix must be at least 1");
    for (std::uint64_t i = 1; i <= *o.prefix; ++i) atoms.push_back(s.at(i));
  } else if (s.length()) {
    for (std::uint64_t i = 1; i <= *s.length(); ++i) atoms.push_back(s.at(i));
  } else if (x) {
    atoms = truncate_stream_below(s, *x, limits);
  } else {
    throw UsageError("an infinite family needs --truncate-at or --prefix for this command");
  }
  return normalize(atoms);
}

// --- formatting helpers -----------------------------------------------------

std::string braces(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  os << "}";
  return os.str();
}

std::string spaced(const std::vector<std::uint64_t>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? " " : "") << v[k];
  return os.str();
}

std::string atom_list(const std::vector<Rat>& v, const char* sep, bool machine) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) {
    os << (k ? sep : "") << (machine ? v[k].frac_str() : v[k].str());
  }
  return os.str();
}

std::string approx_mark(const Rat& v) {
  std::ostringstream os;
  os << " (≈ " << v.approx() << ")";
  return os.str();
}

std::string ratio_text(const ExtRat& v) {
  if (v.is_infinite()) return "inf";
  return v.frac_str() + approx_mark(v.finite());
}

// --- emitters ----------------------------------------------------------------

void emit_atoms(const ReducedMonoid& m, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << monoid_to_json(m).dump() << "\n";
    return;
  }
  if (format == "csv") {
    out << "i,atom\n";
    for (std::size_t k = 0; k < m.atoms.size(); ++k) {
      out << (k + 1) << "," << m.atoms[k].frac_str() << "\n";
    }
    return;
  }
  out << "atoms: " << atom_list(m.atoms, ", ", false) << "\n";
  out << "scale: " << m.scale.str() << "\n";
  std::ostringstream gens;
  for (std::size_t k = 0; k < m.gens_int.size(); ++k) {
    gens << (k ? ", " : "") << m.gens_int[k].str();
  }
  out << "integer generators: " << gens.str() << "\n";
  out << "content: " << m.content.str() << "\n";
  if (m.removed.empty()) {
    out << "removed: none\n";
  } else {
    std::ostringstream rem;
    for (std::size_t k = 0; k < m.removed.size(); ++k) {
      rem << (k ? "; " : "") << m.removed[k].value.str()
          << (m.removed[k].kind == ReductionEvent::Kind::Duplicate ? " (duplicate)"
                                                                   : " (sum of other generators)");
    }
    out << "removed: " << rem.str() << "\n";
  }
}

void emit_element(const Rat& x, const ElementReport& r, const std::string& format,
                  std::ostream& out) {
  if (format == "json") {
    out << to_json(r).dump() << "\n";
    return;
  }
  if (format == "csv") {
    out << "member,L,delta,rho\n";
    out << (r.member ? "true" : "false") << "," << spaced(r.lengths) << "," << spaced(r.gaps)
        << "," << (r.rho ? r.rho->frac_str() : "") << "\n";
    return;
  }
  out << "x: " << x.str() << "\n";
  out << "member: " << (r.member ? "yes" : "no") << "\n";
  if (!r.member) return;
  out << "L: " << braces(r.lengths) << "\n";
  out << "delta: " << braces(r.gaps) << "\n";
  out << "rho: " << r.rho->frac_str() << approx_mark(*r.rho) << "\n";
  if (r.factorizations) {
    out << "factorizations (" << r.factorizations->size() << "):\n";
    for (const Factorization& z : *r.factorizations) {
      out << "  (";
      for (std::size_t k = 0; k < z.counts.size(); ++k) out << (k ? ", " : "") << z.counts[k];
      out << ")\n";
    }
  }
}

void emit_elasticity(const ElasticityReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(r).dump() << "\n";
    return;
  }
  if (format == "csv") {
    out << "rho,accepted,search,witness,bound\n";
    out << r.value.frac_str() << "," << (r.accepted() ? "true" : "false") << ","
        << (r.search == ElasticityReport::WitnessSearch::Found ? "found"
                                                               : "not-found-below-bound")
        << "," << (r.witness ? r.witness->frac_str() : "") << "," << r.search_bound.frac_str()
        << "\n";
    return;
  }
  out << "value: " << ratio_text(r.value) << "\n";
  out << "status: " << (r.accepted() ? "accepted" : "no witness found below the bound") << "\n";
  out << "witness: " << (r.witness ? r.witness->str() : "none") << "\n";
  out << "search bound: " << r.search_bound.str() << "\n";
}

void emit_union(const UnionReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(r).dump() << "\n";
    return;
  }
  if (format == "csv") {
    out << "n,U,rho,lambda\n";
    out << r.n << "," << spaced(r.members) << "," << r.rho << "," << r.lambda << "\n";
    return;
  }
  out << "n: " << r.n << "\n";
  out << "U: " << braces(r.members) << "\n";
  out << "rho: " << r.rho << "\n";
  out << "lambda: " << r.lambda << "\n";
}

void emit_bounded_delta(const BoundedDeltaReport& r, const std::string& format,
                        std::ostream& out) {
  if (format == "json") {
    out << to_json(r).dump() << "\n";
    return;
  }
  if (format == "csv") {
    out << "delta,bound,exact\n";
    out << spaced(r.deltas) << "," << r.bound.frac_str() << ","
        << (r.exact ? "true" : "false") << "\n";
    return;
  }
  out << "delta: " << braces(r.deltas) << "\n";
  out << "bound: " << r.bound.str() << "\n";
  out << "exact: " << (r.exact ? "yes" : "no (elements above the bound may contribute more gaps)")
      << "\n";
  if (!r.witnesses.empty()) {
    out << "witnesses:\n";
    for (const auto& [d, w] : r.witnesses) {
      out << "  delta " << d << ": x = " << w.element.str() << ", lengths " << w.lower_length
          << " and " << (w.lower_length + d) << "\n";
    }
  }
}

bool set_sweep(SweepKind kind) {
  return kind == SweepKind::LengthSet || kind == SweepKind::ElementDelta ||
         kind == SweepKind::MonoidDelta;
}

bool delta_sweep(SweepKind kind) {
  return kind == SweepKind::ElementDelta || kind == SweepKind::MonoidDelta;
}

std::string step_value_text(const StepValue& v, bool machine) {
  if (std::holds_alternative<SetValue>(v.value)) {
    const SetValue& s = std::get<SetValue>(v.value);
    return machine ? spaced(s) : braces(s);
  }
  if (!v.member) return machine ? "" : "not a member yet";
  const ExtRat& r = std::get<ExtRat>(v.value);
  return machine ? r.frac_str() : ratio_text(r);
}

void emit_approx(const ApproxReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << to_json(r).dump() << "\n";
    return;
  }
  if (format == "csv") {
    out << "i,atoms,member,value\n";
    for (const ApproxStep& step : r.steps) {
      out << step.index << "," << atom_list(step.atoms, " ", true) << ","
          << (step.value.member ? "true" : "false") << "," << step_value_text(step.value, true)
          << "\n";
    }
    return;
  }
  out << "kind: " << sweep_kind_name(r.kind) << "\n";
  if (r.x) out << "x: " << r.x->str() << "\n";
  if (r.n) out << "n: " << *r.n << "\n";
  if (r.bound) out << "bound: " << r.bound->str() << "\n";
  for (const ApproxStep& step : r.steps) {
    out << "step " << step.index << ": atoms {" << atom_list(step.atoms, ", ", false) << "} -> "
        << (step.value.member ? step_value_text(step.value, false) : "not a member yet") << "\n";
  }
  switch (r.validity.state) {
    case ApproximationCheck::State::Valid:
      out << "chain: valid (every step keeps the previous atoms)\n";
      break;
    case ApproximationCheck::State::Unchecked:
      out << "chain: unchecked (depth 1)\n";
      break;
    case ApproximationCheck::State::Violated:
      out << "chain: violated at step " << *r.validity.violated_at;
      if (r.validity.lost_atom) out << " (atom " << r.validity.lost_atom->str() << " dropped)";
      out << "\n";
      break;
  }
  if (!r.warnings.empty()) {
    out << "warnings:\n";
    for (const std::string& w : r.warnings) out << "  " << w << "\n";
  }
  out << "limit estimate: ";
  if (!r.limit_estimate.member) {
    out << "none (the element never entered the chain)";
  } else {
    out << step_value_text(r.limit_estimate, false);
    if (delta_sweep(r.kind)) out << " (contains the limit delta set; may be strictly larger)";
    if (r.kind == SweepKind::LengthSet) out << " (running union, grows toward the limit)";
  }
  out << "\n";
  switch (r.stabilization.kind) {
    case Stabilization::Kind::Stabilized:
      out << "stabilization: stabilized at step " << *r.stabilization.stabilized_at << " (window "
          << r.stabilization.window << ")\n";
      break;
    case Stabilization::Kind::Increasing:
      out << "stabilization: increasing across the final window (window "
          << r.stabilization.window << ")\n";
      break;
    case Stabilization::Kind::Varying:
      out << "stabilization: varying (window " << r.stabilization.window << ")\n";
      break;
    case Stabilization::Kind::TooShort:
      out << "stabilization: window longer than the sweep (window " << r.stabilization.window
          << ")\n";
      break;
  }
  if (!set_sweep(r.kind)) {
    if (r.divergence.suspected) {
      out << "divergence: suspected\n";
      for (const std::string& reason : r.divergence.reasons) out << "  - " << reason << "\n";
    } else {
      out << "divergence: none suspected\n";
    }
  }
  if (r.monotone) out << "monotone: " << (*r.monotone ? "yes" : "no") << "\n";
}

// --- dispatch ----------------------------------------------------------------

void add_source_options(CLI::App* cmd, Options& o, bool with_truncation) {
  cmd->add_option("--atoms", o.atoms_csv, "comma-separated atom list, e.g. 4,6,9 or 1/2,1/3");
  cmd->add_option("--spec", o.spec_path, "JSON file with a monoid or family document");
  cmd->add_option("--family", o.family,
                  "built-in family: cyclic, example46, multicyclic, unit_fraction_primes");
  cmd->add_option("--r", o.r_text, "family parameter r, a rational like 2/3");
  cmd->add_option("--i", o.i_val, "family parameter i (example46)");
  cmd->add_option("--B", o.b_csv, "family parameter B, comma-separated rationals (multicyclic)");
  cmd->add_option("--count", o.count, "family parameter count (unit_fraction_primes)");
  if (with_truncation) {
    cmd->add_option("--truncate-at", o.truncate_text, "keep only stream atoms <= this rational");
    cmd->add_option("--prefix", o.prefix, "keep only the first k stream atoms");
  }
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

int dispatch(const CLI::App& app, CLI::App* c_atoms, CLI::App* c_lengths, CLI::App* c_delta,
             CLI::App* c_elasticity, CLI::App* c_union, CLI::App* c_approx, const Options& o,
             std::ostream& out) {
  Limits limits = limits_from_env();

  if (app.got_subcommand(c_atoms)) {
    emit_atoms(monoid_from(o, std::nullopt, limits), o.format, out);
    return 0;
  }
  if (app.got_subcommand(c_lengths)) {
    Rat x = parse_rat_flag("--x", o.x_text);
    ReducedMonoid m = monoid_from(o, x, limits);
    emit_element(x, element_report(m, x, o.show_factorizations, limits), o.format, out);
    return 0;
  }
  if (app.got_subcommand(c_delta)) {
    if (!o.x_text.empty()) {
      Rat x = parse_rat_flag("--x", o.x_text);
      ReducedMonoid m = monoid_from(o, x, limits);
      emit_element(x, element_report(m, x, false, limits), o.format, out);
      return 0;
    }
    ReducedMonoid m = monoid_from(o, std::nullopt, limits);
    std::optional<Rat> bound;
    if (!o.bound_text.empty()) bound = parse_rat_flag("--bound", o.bound_text);
    emit_bounded_delta(monoid_delta_bounded(m, bound, limits), o.format, out);
    return 0;
  }
  if (app.got_subcommand(c_elasticity)) {
    ReducedMonoid m = monoid_from(o, std::nullopt, limits);
    std::optional<Rat> bound;
    if (!o.bound_text.empty()) bound = parse_rat_flag("--bound", o.bound_text);
    emit_elasticity(monoid_elasticity(m, bound, limits), o.format, out);
    return 0;
  }
  if (app.got_subcommand(c_union)) {
    ReducedMonoid m = monoid_from(o, std::nullopt, limits);
    emit_union(union_of_lengths(m, *o.n_val, limits), o.format, out);
    return 0;
  }
  if (app.got_subcommand(c_approx)) {
    AtomStream s = stream_from(o);
    std::optional<Rat> x;
    if (!o.x_text.empty()) x = parse_rat_flag("--x", o.x_text);
    std::optional<Rat> bound;
    if (!o.bound_text.empty()) bound = parse_rat_flag("--bound", o.bound_text);

    ApproxReport report;
    if (o.invariant == "lengths") {
      if (!x) throw UsageError("--invariant lengths needs --x");
      report = approx_length_set(s, *x, o.depth, o.window, limits);
    } else if (o.invariant == "elasticity") {
      report = approx_elasticity(s, o.depth, x, o.window, limits);
    } else if (o.invariant == "local") {
      if (!o.n_val) throw UsageError("--invariant local needs --n");
      report = approx_local_elasticity(s, *o.n_val, o.depth, o.window, limits);
    } else {
      report = approx_delta(s, o.depth, x, bound, o.window, limits);
    }
    emit_approx(report, o.format, out);
    return 0;
  }
  throw std::logic_error("no subcommand dispatched");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Length-based factorization invariants of Puiseux monoids", "puiseux"};
  app.require_subcommand(1);
  Options o;

  CLI::App* c_atoms = app.add_subcommand("atoms", "Normalized atom list and integer form");
  add_source_options(c_atoms, o, true);

  CLI::App* c_lengths = app.add_subcommand("lengths", "Length set, gaps and elasticity of x");
  add_source_options(c_lengths, o, true);
  c_lengths->add_option("--x", o.x_text, "element to factor")->required();
  c_lengths->add_flag("--show-factorizations", o.show_factorizations,
                      "list every factorization of x");

  CLI::App* c_delta = app.add_subcommand("delta", "Delta set of x, or of the monoid below a bound");
  add_source_options(c_delta, o, true);
  c_delta->add_option("--x", o.x_text, "element whose gaps to report (omit for the monoid scan)");
  c_delta->add_option("--bound", o.bound_text, "scan elements up to this rational");

  CLI::App* c_elasticity = app.add_subcommand("elasticity", "Monoid elasticity and its witness");
  add_source_options(c_elasticity, o, true);
  c_elasticity->add_option("--bound", o.bound_text, "witness search extent");

  CLI::App* c_union = app.add_subcommand("union", "Union of length sets over elements of length n");
  add_source_options(c_union, o, true);
  c_union->add_option("--n", o.n_val, "length whose union to compute")->required();

  CLI::App* c_approx = app.add_subcommand("approx", "Per-step invariants of the prefix chain");
  add_source_options(c_approx, o, false);
  c_approx->add_option("--invariant", o.invariant, "which invariant to sweep")
      ->required()
      ->check(CLI::IsMember({"lengths", "elasticity", "local", "delta"}));
  c_approx->add_option("--x", o.x_text, "element to track through the chain");
  c_approx->add_option("--n", o.n_val, "length for the local elasticity sweep");
  c_approx->add_option("--depth", o.depth, "number of prefix steps");
  c_approx->add_option("--bound", o.bound_text, "element bound for the delta sweep");
  c_approx->add_option("--window", o.window, "stabilization window");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("puiseux");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    std::vector<CLI::App*> subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return 0;
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run 'puiseux --help' for usage\n";
    return 1;
  }

  try {
    return dispatch(app, c_atoms, c_lengths, c_delta, c_elasticity, c_union, c_approx, o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid spec document: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "invalid: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace puiseux
