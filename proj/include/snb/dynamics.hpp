#pragma once

// Time evolution df/dt = {f, h_1, .., h_{n-1}} as truncated Taylor series
// with exact coefficients.

#include <vector>

#include "json.hpp"
#include "snb/bracket.hpp"
#include "snb/check_report.hpp"

namespace snb {

class NHSystem {
 public:
  /// Throws ArityError unless there are arity-1 Hamiltonians, SpaceMismatch
  /// if one lives elsewhere. Mixed-parity Hamiltonians are allowed; the
  /// bracket extends multilinearly.
  NHSystem(BracketSpec spec, std::vector<Supernumber> hamiltonians);

  const BracketSpec& spec() const noexcept { return spec_; }
  const std::vector<Supernumber>& hamiltonians() const noexcept { return hamiltonians_; }

 private:
  BracketSpec spec_;
  std::vector<Supernumber> hamiltonians_;
};

/// coefficients[i][k] is the t^k coefficient of coordinate i.
struct FlowSeries {
  SpacePtr space;
  std::vector<std::vector<Supernumber>> coefficients;

  std::size_t order() const { return coefficients.empty() ? 0 : coefficients[0].size() - 1; }
  /// {"coordinate": ["coeff0", "coeff1", ...]} in coordinate order.
  nlohmann::ordered_json to_json() const;
};

Supernumber eom_rhs(const NHSystem& sys, const Supernumber& f);

/// Series of f(z(t)) up to t^order: c_0 = f, c_{k+1} = eom_rhs(c_k)/(k+1).
/// Throws PreconditionError for order 0 and when a coefficient exceeds
/// `max_bosonic_degree`.
std::vector<Supernumber> lie_series(const NHSystem& sys, const Supernumber& f, std::size_t order,
                                    unsigned max_bosonic_degree = 64);

FlowSeries evolve(const NHSystem& sys, std::size_t order = 8, unsigned max_bosonic_degree = 64);

/// Substitutes the coordinate series into f, truncating at the flow order.
std::vector<Supernumber> compose(const Supernumber& f, const FlowSeries& flow);

/// Passes when eom_rhs(quantity) vanishes; details.rate holds the rate.
CheckReport conserved_check(const NHSystem& sys, const Supernumber& quantity);

}  // namespace snb
