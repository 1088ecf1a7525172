#include "snb/dynamics.hpp"

#include "snb/errors.hpp"

namespace snb {

namespace {

using Series = std::vector<Supernumber>;

Series truncated_product(const Series& a, const Series& b) {
  Series out(a.size(), Supernumber(a.front().space_ptr()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

NHSystem::NHSystem(BracketSpec spec, std::vector<Supernumber> hamiltonians)
    : spec_(std::move(spec)), hamiltonians_(std::move(hamiltonians)) {
  if (hamiltonians_.size() + 1 != spec_.arity()) throw ArityError(spec_.arity() - 1, hamiltonians_.size());
  for (const auto& h : hamiltonians_)
    if (!same_space(h.space_ptr(), spec_.space())) throw SpaceMismatch();
}

nlohmann::ordered_json FlowSeries::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    auto& list = out[space->coord(i).name] = nlohmann::ordered_json::array();
    for (const auto& c : coefficients[i]) list.push_back(format(c));
  }
  return out;
}

Supernumber eom_rhs(const NHSystem& sys, const Supernumber& f) {
  if (!same_space(f.space_ptr(), sys.spec().space())) throw SpaceMismatch();
  std::vector<Supernumber> args{f};
  args.insert(args.end(), sys.hamiltonians().begin(), sys.hamiltonians().end());
  return eval_bracket(sys.spec(), args);
}

std::vector<Supernumber> lie_series(const NHSystem& sys, const Supernumber& f, std::size_t order,
                                    unsigned max_bosonic_degree) {
  if (order == 0) throw PreconditionError("series order must be at least 1");
  Series out{f};
  for (std::size_t k = 0; k < order; ++k) {
    Supernumber next = Rational(1, static_cast<long>(k + 1)) * eom_rhs(sys, out.back());
    if (next.bosonic_degree() > max_bosonic_degree)
      throw PreconditionError("series coefficient t^" + std::to_string(k + 1) + " exceeds bosonic degree " +
                              std::to_string(max_bosonic_degree));
    out.push_back(std::move(next));
  }
  return out;
}

FlowSeries evolve(const NHSystem& sys, std::size_t order, unsigned max_bosonic_degree) {
  const auto& space = sys.spec().space();
  FlowSeries flow{space, {}};
  for (std::size_t i = 0; i < space->size(); ++i)
    flow.coefficients.push_back(lie_series(sys, Supernumber::coordinate(space, i), order, max_bosonic_degree));
  return flow;
}

std::vector<Supernumber> compose(const Supernumber& f, const FlowSeries& flow) {
  const auto& space = flow.space;
  if (!same_space(f.space_ptr(), space)) throw SpaceMismatch();
  const std::size_t len = flow.order() + 1;
  Series total(len, Supernumber(space));
  for (const auto& [mono, c] : f.terms()) {
    Series term(len, Supernumber(space));
    term[0] = Supernumber::constant(space, c);
    for (std::size_t b = 0; b < mono.exponents.size(); ++b)
      for (std::uint32_t e = 0; e < mono.exponents[b]; ++e)
        term = truncated_product(term, flow.coefficients[space->bosonic_coord(b)]);
    for (std::size_t j = 0; j < space->fermionic_count(); ++j)
      if (mono.odd_mask >> j & 1u) term = truncated_product(term, flow.coefficients[space->fermionic_coord(j)]);
    for (std::size_t k = 0; k < len; ++k) total[k] += term[k];
  }
  return total;
}

CheckReport conserved_check(const NHSystem& sys, const Supernumber& quantity) {
  CheckReport report;
  report.suite = "conserved";
  report.spec = sys.spec().name();
  report.trials = 1;
  const Supernumber rate = eom_rhs(sys, quantity);
  if (!rate.is_zero()) report.record({"rate", {format(quantity)}, format(rate), "0"});
  report.details["quantity"] = format(quantity);
  report.details["rate"] = format(rate);
  return report;
}

}  // namespace snb
