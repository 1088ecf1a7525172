// Acceptance run: one PASS/FAIL line per criterion, followed by indented
// detail lines. `--criterion N` runs a single criterion (ctest registers each
// separately); without it all ten run. Equality is exact everywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snb/bv_divergence.hpp"
#include "snb/cli.hpp"
#include "snb/dynamics.hpp"
#include "snb/identity_suite.hpp"
#include "snb/lie_construction.hpp"
#include "snb/sampler.hpp"

using namespace snb;

namespace {

constexpr double kSuiteBudgetSeconds = 30.0;
constexpr double kBvBudgetSeconds = 60.0;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { notes.push_back("     " + what); }
};

CheckParams standard(std::uint64_t seed = 42) {
  CheckParams p;
  p.seed = seed;
  p.samples = 100;
  p.max_degree = 2;
  return p;
}

std::string summary(const CheckReport& r) {
  std::ostringstream s;
  s << r.suite << " [" << r.spec << "] " << r.failure_count << "/" << r.trials << " failing";
  return s.str();
}

void require_report(Outcome& o, const CheckReport& r) {
  std::string line = summary(r);
  if (!r.passed() && !r.failures.empty()) {
    const auto& f = r.failures.front();
    line += "; e.g. args (";
    for (std::size_t i = 0; i < f.args.size(); ++i) line += (i ? "; " : "") + f.args[i];
    line += ") lhs " + f.lhs + " rhs " + f.rhs;
  }
  o.require(r.passed(), line);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void axiom_suite(Outcome& o, const BracketSpec& spec) {
  const auto p = standard();
  require_report(o, check_skew(spec, p));
  require_report(o, check_leibniz_first(spec, p));
  require_report(o, check_leibniz_inner(spec, p));
  require_report(o, check_cyclic(spec, p));
  require_report(o, check_fi(spec, p));
  if (spec.arity() == 3) require_report(o, check_generalized_skew(spec, p));
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  axiom_suite(o, builtin("odd_r21"));
  const double t = seconds_since(t0);
  o.require(t < kSuiteBudgetSeconds, "runtime " + std::to_string(t) + " s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  axiom_suite(o, builtin("even_r12"));
  axiom_suite(o, builtin("antibracket_r11"));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto p = standard();
  for (const auto& name : builtin_names()) {
    const auto spec = builtin(name);
    const std::vector<LogDensity> densities{LogDensity::flat(spec.space()),
                                            LogDensity(random_homogeneous(spec.space(), 0, 2, 42))};
    for (const auto& rho : densities) {
      o.note(name + " sigma = " + format(rho.sigma()));
      const DeltaOperator op(spec, rho);
      if (spec.arity() == 2) {
        require_report(o, check_bv_n2(op, p));
        require_report(o, check_delta_leibniz_n2(op, p));
      }
      require_report(o, check_delta_product_rule(op, p));
      require_report(o, check_delta_skew(op, p));
      require_report(o, check_delta_fi(op, p));
    }
  }
  const double t = seconds_since(t0);
  o.require(t < kBvBudgetSeconds, "runtime " + std::to_string(t) + " s");
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const char* name : {"odd_r21", "even_r12"}) {
    const auto spec = builtin(name);
    std::vector<std::string> passing_per_seed;
    for (std::uint64_t seed : {42u, 7u, 2024u}) {
      std::string passing;
      for (auto c : {Convention::AB, Convention::BA}) {
        const auto r = check_field_commutator(spec, c, standard(seed));
        o.note(summary(r) + " seed " + std::to_string(seed));
        if (r.passed()) passing += std::string(passing.empty() ? "" : ",") + to_string(c);
      }
      passing_per_seed.push_back(passing.empty() ? "none" : passing);
    }
    bool stable = true;
    for (const auto& s : passing_per_seed) stable = stable && s == passing_per_seed.front();
    o.require(passing_per_seed.front() != "none" && stable,
              std::string(name) + " passing convention: " + passing_per_seed[0] + " / " + passing_per_seed[1] +
                  " / " + passing_per_seed[2]);
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  CheckParams p = standard();
  p.samples = 25;  // 4 parity patterns -> 100 pairs
  const auto r = cross_check_div_formula(p);
  o.note(summary(r));
  o.note("by parity pattern: " + r.details.value("by_parity_pattern", nlohmann::json()).dump());
  o.require(r.trials == 100, "100 random homogeneous pairs");
  if (r.passed()) {
    o.require(true, "general Delta agrees with the closed form on every pair");
  } else {
    // The alternative outcome: every mismatch is tallied by pattern and
    // concrete mismatching pairs are recorded.
    const std::string reading = r.details.value("index_reading", "");
    std::size_t tallied = 0;
    if (r.details.contains("by_parity_pattern"))
      for (const auto& [pattern, readings] : r.details["by_parity_pattern"].items())
        if (readings.contains(reading))
          for (const auto& [key, v] : readings[reading].items())
            if (key != "agree") tallied += v.get<std::size_t>();
    o.require(!r.failures.empty() && tallied == r.failure_count,
              "discrepancy documented: " + std::to_string(tallied) + " mismatches classified, " +
                  std::to_string(r.failures.size()) + " recorded with exact values");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto spec = builtin("odd_r21");
  const std::vector<Supernumber> tail{parse("th", spec.space())};
  const auto r = find_restricted_fi_failure(spec, tail, standard());
  const bool found = r.details.value("witness_found", false) && !r.failures.empty();
  std::string line = "witness after " + std::to_string(r.trials) + " trials";
  if (found) {
    const auto& f = r.failures.front();
    line += ": (";
    for (std::size_t i = 0; i < f.args.size(); ++i) line += (i ? "; " : "") + f.args[i];
    line += ") lhs " + f.lhs + " rhs " + f.rhs;
  }
  o.require(found && r.failures.front().lhs != r.failures.front().rhs, line);
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto so3 = example_algebra("so3");
  const auto tau = TauMap::lie_bracket(so3);
  require_report(o, validate_algebra(*so3));
  require_report(o, validate_tau(tau));
  const auto r = check_built_bracket(tau, standard());
  require_report(o, r);
  o.note("exhaustive basis tuples: " + r.details["exhaustive_trials"].dump());
  const auto b = build_bracket(tau);
  auto e = [&](std::size_t i) { return AlgebraElement::basis(so3, i); };
  std::vector<AlgebraElement> args{e(0), e(0), e(1)};
  const auto value = b(std::span<const AlgebraElement>(args));
  o.require(value == -e(1), "{e1,e1,e2} = " + format(value));
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto spec = builtin("odd_r21");
  const auto& s = spec.space();
  const NHSystem sys(spec, {parse("x2^2/2", s), parse("th", s)});
  const auto flow = evolve(sys, 8);
  const std::vector<std::vector<std::string>> expected = {
      {"x1", "x2", "0", "0", "0", "0", "0", "0", "0"},
      {"x2", "0", "0", "0", "0", "0", "0", "0", "0"},
      {"th", "0", "0", "0", "0", "0", "0", "0", "0"}};
  for (std::size_t i = 0; i < s->size(); ++i) {
    std::vector<std::string> got;
    for (const auto& c : flow.coefficients[i]) got.push_back(format(c));
    o.require(got == expected[i], s->coord(i).name + "(t) = " + nlohmann::json(got).dump());
  }
  for (const auto& h : sys.hamiltonians()) {
    const auto r = conserved_check(sys, h);
    o.require(r.passed(), "rate of " + format(h) + " = " + r.details["rate"].get<std::string>());
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto spec = builtin("odd_r21");
  const auto p = standard();
  for (std::size_t k = 0; k < spec.terms().size(); ++k) {
    auto terms = spec.terms();
    terms[k].coefficient = -terms[k].coefficient;
    const auto m = spec.with_terms("odd_r21_flip" + std::to_string(k), terms);
    std::string caught_by;
    for (auto* check : {check_skew, check_leibniz_first, check_leibniz_inner, check_fi}) {
      const auto r = check(m, p);
      if (!r.passed()) caught_by += (caught_by.empty() ? "" : ",") + r.suite;
    }
    o.require(!caught_by.empty(), "term " + std::to_string(k + 1) + " flipped: caught by " +
                                      (caught_by.empty() ? std::string("none") : caught_by));
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  const std::vector<std::vector<std::string>> invocations = {
      {"check", "--bracket", "odd_r21", "--suite", "all", "--samples", "10", "--json"},
      {"check", "--bracket", "antibracket_r11", "--suite", "bv", "--density", "x^2", "--json"},
      {"check", "--bracket", "even_r12", "--suite", "div-formula", "--samples", "25", "--json"},
      {"lie", "--algebra", "gl2", "--samples", "5", "--json"},
      {"dynamics", "--bracket", "odd_r21", "--hamiltonians", "x2^2/2;th", "--json"}};
  for (const auto& args : invocations) {
    std::ostringstream a, b, err;
    const int ca = run_cli(args, a, err);
    const int cb = run_cli(args, b, err);
    std::string label;
    for (const auto& s : args) label += s + " ";
    o.require(ca == cb && ca != 2 && !a.str().empty() && a.str() == b.str(),
              label + "-> " + std::to_string(a.str().size()) + " bytes, exit " + std::to_string(ca));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"odd_r21 axiom suite", criterion1},
      {"even_r12 and antibracket_r11 axiom suites", criterion2},
      {"BV relations, flat and random even density", criterion3},
      {"field commutator relation under a stable convention", criterion4},
      {"general Delta vs closed form on 100 pairs", criterion5},
      {"restricted bracket FI witness", criterion6},
      {"so3 with tau = Lie bracket", criterion7},
      {"free system flow at order 8", criterion8},
      {"single-term sign flips detected", criterion9},
      {"byte-identical JSON on repeat", criterion10},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << '\n';
    for (const auto& n : o.notes) std::cout << "      " << n << '\n';
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
