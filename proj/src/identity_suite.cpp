#include "snb/identity_suite.hpp"

#include "snb/errors.hpp"
#include "snb/sampler.hpp"

namespace snb {

namespace {

std::vector<Equation> to_equations(std::vector<Relation<Supernumber>> relations) {
  std::vector<Equation> out;
  out.reserve(relations.size());
  for (auto& r : relations) out.push_back({std::move(r.name), std::move(r.lhs), std::move(r.rhs)});
  return out;
}

std::vector<Equation> one(Relation<Supernumber> r) {
  std::vector<Equation> out;
  out.push_back({std::move(r.name), std::move(r.lhs), std::move(r.rhs)});
  return out;
}

void validate(const CheckParams& params) {
  if (params.samples == 0) throw PreconditionError("samples must be at least 1");
}

}  // namespace

NaryBracket<Supernumber> as_function(const BracketSpec& spec) {
  return [&spec](std::span<const Supernumber> args) { return eval_bracket(spec, args); };
}

CheckReport check_skew(const BracketSpec& spec, const CheckParams& params) {
  validate(params);
  const auto b = as_function(spec);
  const std::size_t n = spec.arity();
  std::size_t slot1_held = 0;
  auto report = run_trials("skew", spec.name(), spec.space(), n, params,
                           [&](std::span<const Supernumber> a, std::span<const int> par) {
                             auto first = swap_relation(b, a, par, 0);
                             if (first.lhs == first.rhs) ++slot1_held;
                             return to_equations(skew_relations(b, a, par));
                           });
  report.details["slot1_swap_held"] = slot1_held;
  if (n == 2) report.details["note"] = "binary bracket: no slot pair i >= 2 to assert";
  return report;
}

CheckReport check_leibniz_first(const BracketSpec& spec, const CheckParams& params) {
  validate(params);
  const auto b = as_function(spec);
  return run_trials("leibniz-first", spec.name(), spec.space(), spec.arity() + 1, params,
                    [&](std::span<const Supernumber> a, std::span<const int> par) {
                      return one(leibniz_first(b, spec.epsilon(), spec.arity(), a, par));
                    });
}

CheckReport check_leibniz_inner(const BracketSpec& spec, const CheckParams& params) {
  validate(params);
  const auto b = as_function(spec);
  return run_trials("leibniz-inner", spec.name(), spec.space(), spec.arity() + 2, params,
                    [&](std::span<const Supernumber> a, std::span<const int> par) {
                      return to_equations(leibniz_inner(b, spec.arity(), a, par));
                    });
}

CheckReport check_cyclic(const BracketSpec& spec, const CheckParams& params) {
  validate(params);
  const auto b = as_function(spec);
  const Supernumber zero(spec.space());
  std::size_t unwrapped_held = 0;
  auto report = run_trials("cyclic", spec.name(), spec.space(), spec.arity() + 1, params,
                           [&](std::span<const Supernumber> a, std::span<const int> par) {
                             auto alt = cyclic_relation(b, spec.arity(), a, par, 0, zero);
                             if (alt.lhs == alt.rhs) ++unwrapped_held;
                             return one(cyclic_relation(b, spec.arity(), a, par, 1, zero));
                           });
  report.details["unwrapped_sign_held"] = unwrapped_held;
  return report;
}

CheckReport check_fi(const BracketSpec& spec, const CheckParams& params) {
  validate(params);
  const auto b = as_function(spec);
  const std::size_t n = spec.arity();
  return run_trials("fi", spec.name(), spec.space(), 2 * n - 1, params,
                    [&](std::span<const Supernumber> a, std::span<const int> par) {
                      return one(fundamental_identity(b, spec.epsilon(), n, a, par));
                    });
}

CheckReport check_generalized_skew(const BracketSpec& spec, const CheckParams& params) {
  validate(params);
  if (spec.arity() != 3) {
    CheckReport report;
    report.suite = "genskew";
    report.spec = spec.name();
    report.params = params;
    report.details["note"] = "defined for ternary brackets only";
    return report;
  }
  const auto b = as_function(spec);
  std::size_t koszul_held = 0;
  auto report = run_trials("genskew", spec.name(), spec.space(), 6, params,
                           [&](std::span<const Supernumber> a, std::span<const int> par) {
                             auto k = generalized_skew(b, a, par, true);
                             if (k.lhs == k.rhs) ++koszul_held;
                             return one(generalized_skew(b, a, par, false));
                           });
  report.details["koszul_dressing_held"] = koszul_held;
  return report;
}

CheckReport find_restricted_fi_failure(const BracketSpec& spec, std::span<const Supernumber> fixed_tail,
                                       const CheckParams& params) {
  validate(params);
  const std::size_t n = spec.arity();
  if (fixed_tail.empty() || fixed_tail.size() >= n - 1)
    throw PreconditionError("restricted bracket needs 1 <= tail length <= n-2");
  int tail_parity = 0;
  for (const auto& t : fixed_tail) {
    if (!same_space(t.space_ptr(), spec.space())) throw SpaceMismatch();
    tail_parity += parity_bit(t.parity());
  }
  const std::size_t p = n - fixed_tail.size();
  const int eps = (spec.epsilon() + tail_parity) & 1;
  std::vector<Supernumber> tail(fixed_tail.begin(), fixed_tail.end());
  NaryBracket<Supernumber> restricted = [&](std::span<const Supernumber> head) {
    std::vector<Supernumber> full(head.begin(), head.end());
    full.insert(full.end(), tail.begin(), tail.end());
    return eval_bracket(spec, full);
  };

  CheckReport report;
  report.suite = "restricted-fi";
  report.spec = spec.name();
  report.params = params;
  report.asserted = false;
  report.details["tail"] = format_all(tail);
  report.details["restricted_arity"] = p;
  report.details["restricted_epsilon"] = eps;
  const auto patterns = parity_patterns(*spec.space(), 2 * p - 1);
  for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
    for (std::size_t s = 0; s < params.samples; ++s) {
      Sampler sampler(derive_seed(params.seed, pi * params.samples + s));
      std::vector<Supernumber> args;
      for (int bit : patterns[pi]) args.push_back(sampler.homogeneous(spec.space(), bit, params.max_degree));
      ++report.trials;
      auto rel = fundamental_identity(restricted, eps, p, std::span<const Supernumber>(args), patterns[pi]);
      if (rel.lhs != rel.rhs) {
        report.record({rel.name, format_all(args), format(rel.lhs), format(rel.rhs)});
        report.details["witness_found"] = true;
        return report;
      }
    }
  }
  report.details["witness_found"] = false;
  return report;
}

}  // namespace snb
