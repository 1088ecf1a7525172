#include "snb/bv_divergence.hpp"

#include "snb/errors.hpp"

namespace snb {

namespace {

const Rational kHalf(1, 2);

std::vector<Equation> one(std::string name, Supernumber lhs, Supernumber rhs) {
  std::vector<Equation> out;
  out.push_back({std::move(name), std::move(lhs), std::move(rhs)});
  return out;
}

int sum(std::span<const int> par, std::size_t from, std::size_t to) {
  int s = 0;
  for (std::size_t i = from; i < to; ++i) s += par[i];
  return s;
}

std::vector<Supernumber> with_first(const Supernumber& head, std::span<const Supernumber> tail) {
  std::vector<Supernumber> v{head};
  v.insert(v.end(), tail.begin(), tail.end());
  return v;
}

std::string density_text(const DeltaOperator& op) { return format(op.density().sigma()); }

void tag(CheckReport& report, const DeltaOperator& op) { report.details["density"] = density_text(op); }

void require_binary(const DeltaOperator& op, const char* what) {
  if (op.spec().arity() != 2) throw PreconditionError(std::string(what) + " requires a binary bracket");
}

}  // namespace

LogDensity::LogDensity(Supernumber sigma) : sigma_(std::move(sigma)) {
  const Parity p = sigma_.parity();
  if (p != Parity::Even && p != Parity::ZeroAny) throw ParityError("log-density must be even");
}

DeltaOperator::DeltaOperator(BracketSpec spec, LogDensity density)
    : spec_(std::move(spec)), density_(std::move(density)) {
  if (!same_space(spec_.space(), density_.sigma().space_ptr())) throw SpaceMismatch();
}

Supernumber divergence(const NHVectorField& field, const LogDensity& density) {
  if (!same_space(field.space, density.sigma().space_ptr())) throw SpaceMismatch();
  Supernumber out(field.space);
  for (std::size_t i = 0; i < field.components.size(); ++i) {
    const auto& x = field.components[i];
    if (x.is_zero()) continue;
    Supernumber term = deriv(x, i, Side::Left);
    if (!density.is_flat()) term += deriv(density.sigma(), i, Side::Left) * x;
    out += term.signed_by(field.space->coord(i).parity);
  }
  return out;
}

Supernumber delta(const DeltaOperator& op, std::span<const Supernumber> args) {
  return kHalf * divergence(nh_field(op.spec(), args), op.density());
}

Supernumber delta(const DeltaOperator& op, std::initializer_list<Supernumber> args) {
  return delta(op, std::span<const Supernumber>(args.begin(), args.size()));
}

CheckReport check_delta_skew(const DeltaOperator& op, const CheckParams& params) {
  const std::size_t m = op.arity();
  auto report = run_trials("delta-skew", op.spec().name(), op.spec().space(), m, params,
                           [&](std::span<const Supernumber> a, std::span<const int> par) {
                             std::vector<Equation> out;
                             const Supernumber base = delta(op, a);
                             for (std::size_t i = 0; i + 1 < m; ++i) {
                               std::vector<Supernumber> sw(a.begin(), a.end());
                               std::swap(sw[i], sw[i + 1]);
                               out.push_back({"swap slots " + std::to_string(i + 1) + "," + std::to_string(i + 2),
                                              base, -delta(op, sw).signed_by(par[i] * par[i + 1])});
                             }
                             return out;
                           });
  tag(report, op);
  if (m < 2) report.details["note"] = "unary operator: nothing to swap";
  return report;
}

CheckReport check_bv_n2(const DeltaOperator& op, const CheckParams& params) {
  require_binary(op, "check_bv_n2");
  const auto& spec = op.spec();
  auto report = run_trials("bv-n2", spec.name(), spec.space(), 2, params,
                           [&](std::span<const Supernumber> a, std::span<const int> par) {
                             const auto &f = a[0], &g = a[1];
                             Supernumber lhs = eval_bracket(spec, {f, g}).signed_by(par[0]);
                             Supernumber rhs = delta(op, {f * g}) - delta(op, {f}) * g -
                                               (f * delta(op, {g})).signed_by(par[0]);
                             return one("bv relation", std::move(lhs), std::move(rhs));
                           });
  tag(report, op);
  return report;
}

CheckReport check_delta_leibniz_n2(const DeltaOperator& op, const CheckParams& params) {
  require_binary(op, "check_delta_leibniz_n2");
  const auto& spec = op.spec();
  auto report = run_trials("delta-leibniz-n2", spec.name(), spec.space(), 2, params,
                           [&](std::span<const Supernumber> a, std::span<const int> par) {
                             const auto &f = a[0], &g = a[1];
                             Supernumber lhs = delta(op, {eval_bracket(spec, {f, g})});
                             Supernumber rhs = eval_bracket(spec, {delta(op, {f}), g}) +
                                               eval_bracket(spec, {f, delta(op, {g})}).signed_by(par[0] + 1);
                             return one("delta derivation of bracket", std::move(lhs), std::move(rhs));
                           });
  tag(report, op);
  return report;
}

CheckReport check_delta_product_rule(const DeltaOperator& op, const CheckParams& params) {
  const auto& spec = op.spec();
  const std::size_t n = spec.arity();
  const int eps = spec.epsilon();
  auto report = run_trials("delta-product", spec.name(), spec.space(), n, params,
                           [&](std::span<const Supernumber> a, std::span<const int> par) {
                             const auto &f = a[0], &g = a[1];
                             const int pf = par[0], pg = par[1];
                             const int pF = sum(par, 2, n);
                             auto rest = a.subspan(2);
                             std::vector<Supernumber> fg{f, g}, gf{g, f};
                             fg.insert(fg.end(), rest.begin(), rest.end());
                             gf.insert(gf.end(), rest.begin(), rest.end());
                             Supernumber lhs = kHalf * (eval_bracket(spec, fg).signed_by(pf * eps) -
                                                        eval_bracket(spec, gf).signed_by((pf + eps) * pg + 1));
                             Supernumber rhs = delta(op, with_first(f * g, rest)) -
                                               (delta(op, with_first(f, rest)) * g).signed_by(pg * pF) -
                                               (f * delta(op, with_first(g, rest))).signed_by(pf * eps);
                             return one("delta product rule", std::move(lhs), std::move(rhs));
                           });
  tag(report, op);
  return report;
}

CheckReport check_nh_product(const BracketSpec& spec, const CheckParams& params) {
  const std::size_t n = spec.arity();
  return run_trials("nh-product", spec.name(), spec.space(), n - 1 + 1, params,
                    [&](std::span<const Supernumber> a, std::span<const int> par) {
                      const auto &f = a[0], &g = a[1];
                      const int pf = par[0], pg = par[1];
                      const int pF = sum(par, 2, n);
                      auto rest = a.subspan(2);
                      const auto lhs = nh_field(spec, with_first(f * g, rest));
                      const auto rhs = signed_by(nh_field(spec, with_first(f, rest)) * g, pg * pF) +
                                       signed_by(nh_field(spec, with_first(g, rest)) * f, pf * (pg + pF));
                      std::vector<Equation> out;
                      for (std::size_t i = 0; i < lhs.components.size(); ++i)
                        out.push_back({"component " + spec.space()->coord(i).name, lhs.components[i],
                                       rhs.components[i]});
                      return out;
                    });
}

CheckReport check_field_commutator(const BracketSpec& spec, Convention convention, const CheckParams& params) {
  const std::size_t m = spec.arity() - 1;
  const int eps = spec.epsilon();
  auto report = run_trials(std::string("field-commutator-") + to_string(convention), spec.name(), spec.space(), 2 * m, params,
                           [&](std::span<const Supernumber> a, std::span<const int> par) {
                             auto g = a.subspan(0, m);
                             auto f = a.subspan(m, m);
                             const int pG = sum(par, 0, m);
                             const int pF = sum(par, m, 2 * m);
                             const auto xg = nh_field(spec, g);
                             const auto xf = nh_field(spec, f);
                             // Parities from the degree formula; zero fields are harmless.
                             NHVectorField xg_h = xg, xf_h = xf;
                             xg_h.parity = ((eps + pG) & 1) ? Parity::Odd : Parity::Even;
                             xf_h.parity = ((eps + pF) & 1) ? Parity::Odd : Parity::Even;
                             const auto lhs = field_commutator(xg_h, xf_h, convention);
                             auto rhs = make_field(spec.space(), std::vector<Supernumber>(spec.space()->size(),
                                                                                          Supernumber(spec.space())));
                             for (std::size_t i = 0; i < m; ++i) {
                               std::vector<Supernumber> gi(g.begin(), g.end());
                               gi[i] = eval_bracket(spec, with_first(g[i], f));
                               rhs = rhs + signed_by(nh_field(spec, gi), (eps + pF) * sum(par, i + 1, m) + 1);
                             }
                             std::vector<Equation> out;
                             for (std::size_t i = 0; i < lhs.components.size(); ++i)
                               out.push_back({"component " + spec.space()->coord(i).name, lhs.components[i],
                                              rhs.components[i]});
                             return out;
                           });
  report.details["convention"] = to_string(convention);
  return report;
}

CheckReport check_delta_fi(const DeltaOperator& op, const CheckParams& params) {
  const auto& spec = op.spec();
  const std::size_t m = spec.arity() - 1;
  const int eps = spec.epsilon();
  auto report = run_trials("delta-fi", spec.name(), spec.space(), 2 * m, params,
                           [&](std::span<const Supernumber> a, std::span<const int> par) {
                             auto f = a.subspan(0, m);
                             auto g = a.subspan(m, m);
                             const int pF = sum(par, 0, m);
                             const int pG = sum(par, m, 2 * m);
                             Supernumber lhs = eval_bracket(spec, with_first(delta(op, f), g));
                             Supernumber rhs =
                                 eval_bracket(spec, with_first(delta(op, g), f)).signed_by((eps + pF) * (eps + pG));
                             for (std::size_t i = 0; i < m; ++i) {
                               std::vector<Supernumber> gi(g.begin(), g.end());
                               gi[i] = eval_bracket(spec, with_first(g[i], f));
                               rhs += delta(op, gi).signed_by((eps + pF) * (eps + sum(par, m + i + 1, 2 * m)) + 1);
                             }
                             return one("delta of field commutator", std::move(lhs), std::move(rhs));
                           });
  tag(report, op);
  return report;
}

CheckReport probe_nilpotency(const DeltaOperator& op, const CheckParams& params) {
  const auto& spec = op.spec();
  const std::size_t m = op.arity();
  if (m == 1) {
    auto report = run_trials("nilpotency", spec.name(), spec.space(), 1, params,
                             [&](std::span<const Supernumber> a, std::span<const int>) {
                               return one("delta squared", delta(op, {delta(op, a)}), Supernumber(spec.space()));
                             });
    report.asserted = op.density().is_flat();
    tag(report, op);
    return report;
  }

  // Composites of an (m)-ary Delta with itself:
  //   nested: Delta(Delta(f_1..f_m), h_2..h_m)
  //   cyclic (m = 2 only): graded cyclic sum of Delta(Delta(a,b),c)
  const std::size_t nargs = m == 2 ? 3 : 2 * m - 1;
  std::size_t nested_nonzero = 0, cyclic_nonzero = 0;
  auto report = run_trials("nilpotency", spec.name(), spec.space(), nargs, params,
                           [&](std::span<const Supernumber> a, std::span<const int> par) {
                             std::vector<Equation> out;
                             const Supernumber zero(spec.space());
                             Supernumber nested = delta(op, with_first(delta(op, a.subspan(0, m)), a.subspan(m)));
                             if (!nested.is_zero()) ++nested_nonzero;
                             out.push_back({"nested composite", nested, zero});
                             if (m == 2) {
                               const auto &x = a[0], &y = a[1], &z = a[2];
                               Supernumber cyc = delta(op, {delta(op, {x, y}), z}) +
                                                 delta(op, {delta(op, {y, z}), x}).signed_by(par[0] * (par[1] + par[2])) +
                                                 delta(op, {delta(op, {z, x}), y}).signed_by(par[2] * (par[0] + par[1]));
                               if (!cyc.is_zero()) ++cyclic_nonzero;
                               out.push_back({"cyclic composite", std::move(cyc), zero});
                             }
                             return out;
                           });
  report.asserted = false;
  report.details["nested_nonzero"] = nested_nonzero;
  if (m == 2) report.details["cyclic_nonzero"] = cyclic_nonzero;
  tag(report, op);
  return report;
}

namespace {

/// `j` is the coordinate read for the unbound index in the second term.
Supernumber div_formula(const BracketSpec& spec, const Supernumber& f, const Supernumber& g, const char* j) {
  const auto& space = *spec.space();
  const auto x = space.index_of("x"), t1 = space.index_of("th1"), t2 = space.index_of("th2");
  const auto tj = space.index_of(j);
  auto d = [](const Supernumber& s, std::size_t c) { return deriv(s, c, Side::Right); };
  auto dxd = [&](const Supernumber& s, std::size_t c) { return d(d(s, c), x); };
  const Supernumber body = dxd(f, t1) * d(g, t2) + d(f, tj) * dxd(g, t2) + dxd(f, t2) * d(g, t1) + d(f, t2) * dxd(g, t1);
  return body.signed_by(parity_bit(g.parity()) + 1);
}

const char* classify(const Supernumber& general, const Supernumber& closed) {
  if (general == closed) return "agree";
  if (general == -closed) return "negated";
  return "other";
}

}  // namespace

Supernumber even_r12_delta_formula(const BracketSpec& spec, const Supernumber& f, const Supernumber& g) {
  return div_formula(spec, f, g, "th1");
}

CheckReport cross_check_div_formula(const CheckParams& params) {
  const BracketSpec spec = builtin("even_r12");
  const DeltaOperator op(spec, LogDensity::flat(spec.space()));
  nlohmann::json by_pattern = nlohmann::json::object();
  auto report = run_trials("div-formula", spec.name(), spec.space(), 2, params,
                           [&](std::span<const Supernumber> a, std::span<const int> par) {
                             Supernumber general = delta(op, a);
                             Supernumber closed = even_r12_delta_formula(spec, a[0], a[1]);
                             const Supernumber alt = div_formula(spec, a[0], a[1], "th2");
                             const std::string key = std::to_string(par[0]) + std::to_string(par[1]);
                             auto& slot = by_pattern[key];
                             for (const char* reading : {"th1", "th2"})
                               if (!slot.contains(reading)) slot[reading] = {{"agree", 0}, {"negated", 0}, {"other", 0}};
                             auto bump = [](nlohmann::json& j) { j = j.get<int>() + 1; };
                             bump(slot["th1"][classify(general, closed)]);
                             bump(slot["th2"][classify(general, alt)]);
                             return one("delta vs closed form", std::move(general), std::move(closed));
                           });
  report.asserted = false;
  report.details["index_reading"] = "th1";
  report.details["agreements"] = report.trials - report.failure_count;
  // Keys are the parities of (f, g); counts compare the general operator
  // with each reading of the closed form.
  report.details["by_parity_pattern"] = by_pattern;
  return report;
}

}  // namespace snb
