#include "snb/cli.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "json.hpp"
#include "snb/bv_divergence.hpp"
#include "snb/dynamics.hpp"
#include "snb/errors.hpp"
#include "snb/identity_suite.hpp"
#include "snb/lie_construction.hpp"

namespace snb {

namespace {

using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct RunConfig {
  std::string bracket = "odd_r21";
  std::string space;
  CheckParams params;
  std::string density;
  std::string convention;
  bool json_output = false;

  std::string args;
  std::string suite = "all";
  std::string tail;
  std::string hamiltonians;
  std::size_t order = 8;
  unsigned max_bosonic_degree = 64;
  std::string conserved;
  std::string algebra;
  std::string tau;
  std::string tau_reading = "per_summand";
};

// eq34 and eq35 are accepted as older names of delta-product and
// field-commutator.
const std::vector<std::string> kSuites = {
    "all",           "skew",     "leibniz",    "fi",         "cyclic",        "genskew",
    "bv",            "delta-fi", "nilpotency", "nh-product", "restricted-fi", "div-formula",
    "delta-product", "field-commutator", "eq34", "eq35"};

std::vector<std::string> split_args(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(';', start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Supernumber> parse_list(const std::string& text, const SpacePtr& space) {
  std::vector<Supernumber> out;
  for (const auto& part : split_args(text)) out.push_back(parse(part, space));
  return out;
}

BracketSpec load_bracket(const RunConfig& cfg) {
  BracketSpec spec = resolve_bracket(cfg.bracket);
  if (!cfg.space.empty() && !(*GradedSpace::parse(cfg.space) == *spec.space()))
    throw SpaceMismatch();
  return spec;
}

LogDensity load_density(const RunConfig& cfg, const SpacePtr& space) {
  if (cfg.density.empty()) return LogDensity::flat(space);
  return LogDensity(parse(cfg.density, space));
}

/// Runs one convention, or both when none is pinned; the combined report
/// passes if some convention passes and names the passing ones.
CheckReport run_field_commutator(const BracketSpec& spec, const RunConfig& cfg) {
  if (!cfg.convention.empty()) return check_field_commutator(spec, parse_convention(cfg.convention), cfg.params);
  auto ab = check_field_commutator(spec, Convention::AB, cfg.params);
  auto ba = check_field_commutator(spec, Convention::BA, cfg.params);
  CheckReport out = ab.failure_count <= ba.failure_count ? ab : ba;
  out.suite = "field-commutator";
  json passing = json::array();
  if (ab.passed()) passing.push_back("ab");
  if (ba.passed()) passing.push_back("ba");
  out.details = {{"passing_conventions", passing},
                 {"ab_failure_count", ab.failure_count},
                 {"ba_failure_count", ba.failure_count},
                 {"trials_per_convention", ab.trials}};
  return out;
}

std::vector<CheckReport> run_suite(const std::string& suite, const BracketSpec& spec, const RunConfig& cfg) {
  const auto& p = cfg.params;
  const bool all = suite == "all";
  std::vector<CheckReport> out;
  auto want = [&](const char* name) { return all || suite == name; };
  const DeltaOperator op(spec, load_density(cfg, spec.space()));

  if (want("skew")) out.push_back(check_skew(spec, p));
  if (want("leibniz")) {
    out.push_back(check_leibniz_first(spec, p));
    out.push_back(check_leibniz_inner(spec, p));
  }
  if (want("cyclic")) out.push_back(check_cyclic(spec, p));
  if (want("fi")) out.push_back(check_fi(spec, p));
  if (want("genskew") && (!all || spec.arity() == 3)) out.push_back(check_generalized_skew(spec, p));
  if (want("nh-product")) out.push_back(check_nh_product(spec, p));
  if (want("bv")) {
    if (spec.arity() == 2) {
      out.push_back(check_bv_n2(op, p));
      out.push_back(check_delta_leibniz_n2(op, p));
    }
    out.push_back(check_delta_skew(op, p));
  }
  if (want("delta-product") || suite == "eq34") out.push_back(check_delta_product_rule(op, p));
  if (want("delta-fi")) out.push_back(check_delta_fi(op, p));
  if (want("field-commutator") || suite == "eq35") out.push_back(run_field_commutator(spec, cfg));
  if (suite == "nilpotency") out.push_back(probe_nilpotency(op, p));
  if (suite == "div-formula") out.push_back(cross_check_div_formula(p));
  if (suite == "restricted-fi") {
    if (cfg.tail.empty()) throw PreconditionError("restricted-fi needs --tail");
    const auto tail = parse_list(cfg.tail, spec.space());
    out.push_back(find_restricted_fi_failure(spec, tail, p));
  }
  return out;
}

int emit_reports(const std::vector<CheckReport>& reports, const json& header, const RunConfig& cfg,
                 std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports)
    if (r.asserted && !r.passed()) ok = false;
  if (cfg.json_output) {
    json doc = header;
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(r.to_json());
    doc["passed"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    for (auto it = header.begin(); it != header.end(); ++it)
      out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    for (const auto& r : reports) out << render_text(r);
    out << (ok ? "OK" : "FAILED") << '\n';
  }
  return ok ? kOk : kFailed;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const auto spec = load_bracket(cfg);
  const auto args = parse_list(cfg.args, spec.space());
  if (args.size() != spec.arity()) throw ArityError(spec.arity(), args.size());
  const auto value = format(eval_bracket(spec, args));
  if (cfg.json_output)
    out << json{{"bracket", spec.name()}, {"value", value}}.dump(2) << '\n';
  else
    out << value << '\n';
  return kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (std::find(kSuites.begin(), kSuites.end(), cfg.suite) == kSuites.end())
    throw PreconditionError("unknown suite '" + cfg.suite + "'");
  const auto spec = load_bracket(cfg);
  const auto reports = run_suite(cfg.suite, spec, cfg);
  json header = {{"seed", cfg.params.seed}, {"bracket", spec.name()}, {"suite", cfg.suite}};
  if (!cfg.density.empty()) header["density"] = cfg.density;
  return emit_reports(reports, header, cfg, out);
}

int cmd_dynamics(const RunConfig& cfg, std::ostream& out) {
  const auto spec = load_bracket(cfg);
  const NHSystem sys(spec, parse_list(cfg.hamiltonians, spec.space()));
  if (cfg.order == 0) throw PreconditionError("--order must be at least 1");
  const auto flow = evolve(sys, cfg.order, cfg.max_bosonic_degree);
  std::vector<CheckReport> rates;
  for (const auto& q : parse_list(cfg.conserved, spec.space())) rates.push_back(conserved_check(sys, q));

  if (cfg.json_output) {
    if (rates.empty()) {
      out << flow.to_json().dump(2) << '\n';
    } else {
      nlohmann::ordered_json doc = {{"series", flow.to_json()}, {"conserved", nlohmann::ordered_json::array()}};
      for (const auto& r : rates) doc["conserved"].push_back(nlohmann::ordered_json::parse(r.to_json().dump()));
      out << doc.dump(2) << '\n';
    }
  } else {
    for (std::size_t i = 0; i < flow.coefficients.size(); ++i) {
      out << spec.space()->coord(i).name << ": [";
      for (std::size_t k = 0; k < flow.coefficients[i].size(); ++k) out << (k ? ", " : "") << format(flow.coefficients[i][k]);
      out << "]\n";
    }
    for (const auto& r : rates) out << render_text(r);
  }
  for (const auto& r : rates)
    if (!r.passed()) return kFailed;
  return kOk;
}

bool is_example(const std::string& name) {
  const auto names = example_algebra_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

int cmd_lie(const RunConfig& cfg, std::ostream& out) {
  if (cfg.algebra.empty()) throw PreconditionError("lie needs --algebra");
  const bool example = is_example(cfg.algebra);
  const auto alg = example ? example_algebra(cfg.algebra) : load_algebra_file(cfg.algebra);
  const std::string tau_source = !cfg.tau.empty() ? cfg.tau : (example ? "example" : "bracket");
  const auto reading = parse_tau_reading(cfg.tau_reading);
  std::vector<CheckReport> reports{validate_algebra(*alg)};
  json header = {{"seed", cfg.params.seed}, {"algebra", alg->name()}, {"tau", tau_source}};
  if (!reports.back().passed()) return emit_reports(reports, header, cfg, out);

  const auto tau = tau_source == "example" ? example_tau(cfg.algebra) : resolve_tau(tau_source, alg);
  reports.push_back(validate_tau(tau, reading));
  if (!reports.back().passed()) return emit_reports(reports, header, cfg, out);

  reports.push_back(check_built_bracket(tau, cfg.params, reading));
  reports.push_back(check_tau_span_closure(tau));
  if (alg->has_product()) {
    reports.push_back(check_tau_cyclic(tau, cfg.params));
    reports.push_back(probe_built_generalized_skew(tau));
  }
  return emit_reports(reports, header, cfg, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Super Nambu bracket toolkit", "snb"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--bracket", cfg.bracket, "Builtin bracket name or bracket JSON file");
  app.add_option("--space", cfg.space, "Expected coordinate declaration, e.g. x1:b,x2:b,th:f");
  app.add_option("--seed", cfg.params.seed, "Master seed");
  app.add_option("--samples", cfg.params.samples, "Samples per argument parity pattern");
  app.add_option("--max-degree", cfg.params.max_degree, "Bosonic degree of random inputs");
  app.add_option("--density", cfg.density, "Log-density sigma (even expression)");
  app.add_option("--convention", cfg.convention, "Field commutator convention")->check(CLI::IsMember({"ab", "ba"}));
  app.add_flag("--json", cfg.json_output, "JSON output");

  auto* eval = app.add_subcommand("eval", "Evaluate the bracket on ';'-separated arguments");
  eval->add_option("--args", cfg.args)->required();

  auto* check = app.add_subcommand("check", "Run identity suites on random inputs");
  check->add_option("--suite", cfg.suite)->check(CLI::IsMember(kSuites));
  check->add_option("--tail", cfg.tail, "Frozen trailing arguments for restricted-fi");

  auto* dyn = app.add_subcommand("dynamics", "Taylor series of the flow");
  dyn->add_option("--hamiltonians", cfg.hamiltonians)->required();
  dyn->add_option("--order", cfg.order);
  dyn->add_option("--max-bosonic-degree", cfg.max_bosonic_degree);
  dyn->add_option("--conserved", cfg.conserved, "Quantities whose rate is checked");

  auto* lie = app.add_subcommand("lie", "Bracket from a Lie superalgebra and a tau map");
  lie->add_option("--algebra", cfg.algebra, "Example name or algebra JSON file")->required();
  lie->add_option("--tau", cfg.tau, "'bracket' or tau JSON file; defaults to the example's own map");
  lie->add_option("--tau-reading", cfg.tau_reading, "Sign placement asserted in the invariance check")
      ->check(CLI::IsMember({"per_summand", "sign_outside", "koszul_left"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (cfg.params.samples == 0) throw PreconditionError("--samples must be at least 1");
    const bool randomized = check->parsed() || lie->parsed();
    if (randomized && !cfg.json_output) out << "effective seed: " << cfg.params.seed << '\n';
    if (eval->parsed()) return cmd_eval(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (dyn->parsed()) return cmd_dynamics(cfg, out);
    return cmd_lie(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace snb
