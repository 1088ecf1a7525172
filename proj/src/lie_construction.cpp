#include "snb/lie_construction.hpp"

#include <functional>

#include "snb/errors.hpp"
#include "snb/sampler.hpp"

namespace snb {

namespace {

using Tuple = std::vector<std::size_t>;
using Elements = std::vector<AlgebraElement>;

void for_each_tuple(std::size_t d, std::size_t len, const std::function<void(const Tuple&)>& fn) {
  Tuple t(len, 0);
  while (true) {
    fn(t);
    std::size_t pos = len;
    while (pos > 0 && ++t[pos - 1] == d) t[--pos] = 0;
    if (pos == 0) return;
  }
}

Elements basis_elements(const AlgebraPtr& alg, const Tuple& t) {
  Elements out;
  for (auto i : t) out.push_back(AlgebraElement::basis(alg, i));
  return out;
}

std::vector<int> parities(const Elements& xs) {
  std::vector<int> out;
  for (const auto& x : xs) out.push_back(parity_bit(x.parity()));
  return out;
}

std::vector<std::string> format_all(const Elements& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(format(x));
  return out;
}

CheckReport make_report(std::string suite, const LieSuperAlgebra& alg) {
  CheckReport r;
  r.suite = std::move(suite);
  r.spec = alg.name();
  return r;
}

bool check(CheckReport& report, const std::string& relation, const Elements& args, const AlgebraElement& lhs,
           const AlgebraElement& rhs, bool new_trial = true) {
  if (lhs == rhs) return true;
  report.record({relation, format_all(args), format(lhs), format(rhs)}, new_trial);
  return false;
}

/// Rows are reduced in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& rows) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c] == 0) continue;
      const Rational f = rows[q][c];
      for (std::size_t k = 0; k < cols; ++k) rows[q][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

bool in_span(const std::vector<std::vector<Rational>>& reduced, const std::vector<std::size_t>& pivots,
             std::vector<Rational> v) {
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    const Rational f = v[pivots[r]];
    if (f == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * reduced[r][k];
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Random nonzero combination of the basis vectors of parity `p`, using the
/// same coefficient mapping as the polynomial sampler.
std::optional<AlgebraElement> random_element(const AlgebraPtr& alg, int p, Sampler& sampler) {
  static constexpr int kNumerators[] = {-3, -2, -1, 1, 2, 3};
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < alg->dim(); ++i)
    if (alg->basis(i).parity == p) eligible.push_back(i);
  if (eligible.empty()) return std::nullopt;
  AlgebraElement out(alg);
  std::vector<Rational> c(alg->dim(), Rational(0));
  while (true) {
    for (auto i : eligible) {
      const std::uint64_t r = sampler.next();
      if (!(r & 1u)) continue;
      c[i] = Rational(kNumerators[(r >> 1) % 6], ((r >> 8) & 1u) ? 2 : 1);
      c[i].canonicalize();
    }
    AlgebraElement e(alg, c);
    if (!e.is_zero()) return e;
  }
}

}  // namespace

CheckReport validate_algebra(const LieSuperAlgebra& algebra) {
  auto alg = std::make_shared<const LieSuperAlgebra>(algebra);
  auto report = make_report("algebra", algebra);
  const int eps = algebra.epsilon();
  const std::size_t d = algebra.dim();
  for_each_tuple(d, 2, [&](const Tuple& t) {
    const auto x = basis_elements(alg, t);
    const auto p = parities(x);
    ++report.trials;
    check(report, "antisymmetry", x, lie_bracket(x[0], x[1]),
          -lie_bracket(x[1], x[0]).signed_by((p[0] + eps) * (p[1] + eps)));
  });
  for_each_tuple(d, 3, [&](const Tuple& t) {
    const auto x = basis_elements(alg, t);
    const auto p = parities(x);
    ++report.trials;
    const auto lhs = lie_bracket(x[0], lie_bracket(x[1], x[2]));
    const auto rhs = lie_bracket(lie_bracket(x[0], x[1]), x[2]) +
                     lie_bracket(x[1], lie_bracket(x[0], x[2])).signed_by((p[0] + eps) * (p[1] + eps));
    check(report, "jacobi", x, lhs, rhs);
  });
  report.details["dimension"] = d;
  report.details["epsilon"] = eps;
  return report;
}

const char* to_string(TauReading r) {
  switch (r) {
    case TauReading::PerSummand: return "per_summand";
    case TauReading::SignOutside: return "sign_outside";
    case TauReading::KoszulLeft: return "koszul_left";
  }
  return "?";
}

TauReading parse_tau_reading(const std::string& text) {
  for (auto r : {TauReading::PerSummand, TauReading::SignOutside, TauReading::KoszulLeft})
    if (text == to_string(r)) return r;
  throw SpecError("unknown tau reading '" + text + "'");
}

CheckReport validate_tau(const TauMap& tau, TauReading reading) {
  const auto& alg = tau.algebra();
  auto report = make_report("tau", *alg);
  const int eps = alg->epsilon();
  const std::size_t m = tau.arity();
  const std::size_t d = alg->dim();

  for_each_tuple(d, m, [&](const Tuple& t) {
    if (m < 2) return;
    const auto b = basis_elements(alg, t);
    const auto p = parities(b);
    ++report.trials;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      auto sw = b;
      std::swap(sw[i], sw[i + 1]);
      if (!check(report, "tau skew slots " + std::to_string(i + 1) + "," + std::to_string(i + 2), b, tau(b),
                 -tau(sw).signed_by(p[i] * p[i + 1])))
        break;
    }
  });

  constexpr TauReading kReadings[] = {TauReading::PerSummand, TauReading::SignOutside, TauReading::KoszulLeft};
  std::size_t tuples = 0;
  std::size_t held[3] = {0, 0, 0};
  for_each_tuple(d, m + 1, [&](const Tuple& t) {
    const auto all = basis_elements(alg, t);
    const auto p = parities(all);
    const AlgebraElement& a = all[0];
    const Elements b(all.begin() + 1, all.end());
    const int pa = p[0] + eps;
    auto bsum = [&](std::size_t from, std::size_t to) {
      int s = 0;
      for (std::size_t j = from; j < to; ++j) s += p[j + 1];
      return s;
    };
    std::vector<AlgebraElement> terms;
    for (std::size_t i = 0; i < m; ++i) {
      auto bi = b;
      bi[i] = lie_bracket(a, b[i]);
      terms.push_back(tau(bi));
    }
    const auto lhs = lie_bracket(a, tau(b));
    ++tuples;
    ++report.trials;
    for (std::size_t r = 0; r < 3; ++r) {
      AlgebraElement rhs(alg);
      for (std::size_t i = 0; i < m; ++i) {
        int s = 0;
        switch (kReadings[r]) {
          case TauReading::PerSummand: s = bsum(i + 1, m); break;
          case TauReading::SignOutside: s = bsum(1, m); break;
          case TauReading::KoszulLeft: s = bsum(0, i); break;
        }
        rhs += terms[i].signed_by(pa * s);
      }
      const bool ok = kReadings[r] == reading ? check(report, "tau invariance", all, lhs, rhs) : lhs == rhs;
      held[r] += ok;
    }
  });

  nlohmann::json counts = {{"tuples", tuples}};
  auto others = nlohmann::json::array();
  const bool asserted_ok = held[static_cast<int>(reading)] == tuples;
  for (std::size_t r = 0; r < 3; ++r) {
    counts[to_string(kReadings[r])] = held[r];
    if (!asserted_ok && kReadings[r] != reading && held[r] == tuples) others.push_back(to_string(kReadings[r]));
  }
  report.details["reading"] = to_string(reading);
  report.details["readings"] = counts;
  report.details["only_other_reading"] = others;
  report.details["arity"] = m;
  return report;
}

CheckReport check_built_bracket(const TauMap& tau, const CheckParams& params, TauReading reading) {
  const auto& alg = tau.algebra();
  if (!validate_algebra(*alg).passed()) throw PreconditionError("algebra fails antisymmetry or Jacobi");
  if (!validate_tau(tau, reading).passed()) throw PreconditionError("tau fails skew-symmetry or invariance");

  auto report = make_report("built-bracket", *alg);
  report.params = params;
  const std::size_t n = tau.arity() + 1;
  const int eps = alg->epsilon();
  const auto b = build_bracket(tau);

  auto run = [&](const Elements& x) {
    const auto p = parities(x);
    ++report.trials;
    const std::span<const AlgebraElement> xs(x);
    if (x.size() == n) {
      bool first = true;
      for (auto& rel : skew_relations(b, xs, p))
        if (!check(report, rel.name, x, rel.lhs, rel.rhs, first)) first = false;
    } else {
      auto rel = fundamental_identity(b, eps, n, xs, p);
      check(report, rel.name, x, rel.lhs, rel.rhs);
    }
  };

  std::size_t exhaustive = 0;
  for (std::size_t len : {n, 2 * n - 1}) {
    for_each_tuple(alg->dim(), len, [&](const Tuple& t) {
      run(basis_elements(alg, t));
      ++exhaustive;
    });
  }

  std::size_t random = 0;
  std::uint64_t stream = 0;
  for (std::size_t len : {n, 2 * n - 1}) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code, stream += params.samples) {
      for (std::size_t s = 0; s < params.samples; ++s) {
        Sampler sampler(derive_seed(params.seed, stream + s));
        Elements x;
        for (std::size_t i = 0; i < len; ++i) {
          auto e = random_element(alg, static_cast<int>((code >> i) & 1u), sampler);
          if (!e) break;
          x.push_back(std::move(*e));
        }
        if (x.size() != len) break;
        run(x);
        ++random;
      }
    }
  }
  report.details["arity"] = n;
  report.details["tau_reading"] = to_string(reading);
  report.details["exhaustive_trials"] = exhaustive;
  report.details["random_trials"] = random;
  return report;
}

CheckReport check_tau_cyclic(const TauMap& tau, const CheckParams& params) {
  const auto& alg = tau.algebra();
  if (!alg->has_product()) throw PreconditionError("product structure required");
  auto report = make_report("tau-cyclic", *alg);
  report.params = params;
  report.asserted = false;
  const std::size_t n = tau.arity() + 1;
  const NaryBracket<AlgebraElement> shifted = [&](std::span<const AlgebraElement> args) {
    return tau(args.subspan(1));
  };
  const AlgebraElement zero(alg);
  std::size_t held = 0, alternate_held = 0;
  auto per_tuple = nlohmann::json::array();
  for_each_tuple(alg->dim(), n, [&](const Tuple& t) {
    Elements x{zero};
    const auto a = basis_elements(alg, t);
    x.insert(x.end(), a.begin(), a.end());
    const auto p = parities(x);
    const std::span<const AlgebraElement> xs(x);
    const auto printed = cyclic_relation(shifted, n, xs, std::span<const int>(p), 0, zero);
    const auto other = cyclic_relation(shifted, n, xs, std::span<const int>(p), 1, zero);
    ++report.trials;
    const bool ok = check(report, "tau cyclic", a, printed.lhs, printed.rhs);
    const bool ok_other = other.lhs == other.rhs;
    held += ok;
    alternate_held += ok_other;
    per_tuple.push_back({{"args", format_all(a)}, {"holds", ok}, {"opposite_last_sign_holds", ok_other}});
  });
  report.details["held"] = held;
  report.details["opposite_last_sign_held"] = alternate_held;
  report.details["per_tuple"] = per_tuple;
  return report;
}

CheckReport check_tau_span_closure(const TauMap& tau) {
  const auto& alg = tau.algebra();
  auto report = make_report("tau-span-closure", *alg);
  report.asserted = false;
  std::vector<std::vector<Rational>> rows;
  for_each_tuple(alg->dim(), tau.arity(), [&](const Tuple& t) {
    const auto v = tau(basis_elements(alg, t));
    if (!v.is_zero()) rows.push_back(v.coeffs());
  });
  const auto pivots = row_reduce(rows);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      const AlgebraElement u(alg, rows[i]), v(alg, rows[j]);
      const auto w = lie_bracket(u, v);
      ++report.trials;
      if (!in_span(rows, pivots, w.coeffs()))
        report.record({"bracket outside tau span", {format(u), format(v)}, format(w), "span"});
    }
  report.details["span_dimension"] = rows.size();
  return report;
}

CheckReport probe_built_generalized_skew(const TauMap& tau) {
  const auto& alg = tau.algebra();
  auto report = make_report("built-genskew", *alg);
  report.asserted = false;
  if (tau.arity() + 1 != 3) {
    report.details["note"] = "defined for ternary brackets only";
    return report;
  }
  if (!alg->has_product()) {
    report.details["note"] = "needs product constants";
    return report;
  }
  const auto b = build_bracket(tau);
  std::size_t koszul_held = 0;
  for_each_tuple(alg->dim(), 6, [&](const Tuple& t) {
    const auto x = basis_elements(alg, t);
    const auto p = parities(x);
    const std::span<const AlgebraElement> xs(x);
    ++report.trials;
    const auto plain = generalized_skew(b, xs, std::span<const int>(p), false);
    check(report, plain.name, x, plain.lhs, plain.rhs);
    const auto k = generalized_skew(b, xs, std::span<const int>(p), true);
    koszul_held += k.lhs == k.rhs;
  });
  report.details["koszul_dressing_held"] = koszul_held;
  return report;
}

}  // namespace snb
