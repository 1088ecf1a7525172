#pragma once

// Divergence of Nambu-Hamiltonian fields with respect to a density
// rho = exp(sigma), the induced (n-1)-ary operator Delta, and checks of the
// Batalin-Vilkovisky type relations it satisfies.

#include "snb/bracket.hpp"
#include "snb/check_report.hpp"

namespace snb {

/// rho = exp(sigma); only d(sigma) enters. sigma must be Even or zero.
class LogDensity {
 public:
  explicit LogDensity(Supernumber sigma);
  static LogDensity flat(const SpacePtr& space) { return LogDensity(Supernumber(space)); }

  const Supernumber& sigma() const noexcept { return sigma_; }
  bool is_flat() const noexcept { return sigma_.is_zero(); }

 private:
  Supernumber sigma_;
};

/// Delta(H_1..H_{n-1}) = div_mu X_{H_1..H_{n-1}} / 2, of degree epsilon.
class DeltaOperator {
 public:
  DeltaOperator(BracketSpec spec, LogDensity density);

  const BracketSpec& spec() const noexcept { return spec_; }
  const LogDensity& density() const noexcept { return density_; }
  std::size_t arity() const noexcept { return spec_.arity() - 1; }
  int parity() const noexcept { return spec_.epsilon(); }

 private:
  BracketSpec spec_;
  LogDensity density_;
};

/// sum_i (-1)^{|z_i|} [ d_l X^i / d z_i + (d_l sigma / d z_i) X^i ]
Supernumber divergence(const NHVectorField& field, const LogDensity& density);

Supernumber delta(const DeltaOperator& op, std::span<const Supernumber> args);
Supernumber delta(const DeltaOperator& op, std::initializer_list<Supernumber> args);

/// Delta(..,f,g,..) = -(-1)^{|f||g|} Delta(..,g,f,..), every adjacent pair.
CheckReport check_delta_skew(const DeltaOperator& op, const CheckParams& params);
/// Binary brackets: (-1)^{|f|}{f,g} = Delta(fg) - Delta(f)g - (-1)^{|f|} f Delta(g).
CheckReport check_bv_n2(const DeltaOperator& op, const CheckParams& params);
/// Binary brackets: Delta({f,g}) = {Delta f, g} + (-1)^{|f|+1} {f, Delta g}.
CheckReport check_delta_leibniz_n2(const DeltaOperator& op, const CheckParams& params);
/// Product rule of Delta in its first slot, in terms of brackets.
CheckReport check_delta_product_rule(const DeltaOperator& op, const CheckParams& params);
/// NH-field product rule X_{fg,..} = (-1)^{|g||F|} X_{f,..} g + (-1)^{|f|(|g|+|F|)} X_{g,..} f.
CheckReport check_nh_product(const BracketSpec& spec, const CheckParams& params);
/// [X_G, X_F] = sum_i (-1)^{(eps+|F|)(sum_{k>i}|g_k|)+1} X_{g_1,..,{g_i,F},..}, componentwise.
CheckReport check_field_commutator(const BracketSpec& spec, Convention convention, const CheckParams& params);
/// Delta applied to the field-commutator relation.
CheckReport check_delta_fi(const DeltaOperator& op, const CheckParams& params);

/// Binary flat case: asserts Delta(Delta f) = 0. Otherwise report-only
/// search for non-vanishing composites of Delta with itself.
CheckReport probe_nilpotency(const DeltaOperator& op, const CheckParams& params);

/// Transcription of the closed-form Delta(f,g) for even_r12 (flat density),
/// with the unbound index of its second term read as theta_1.
Supernumber even_r12_delta_formula(const BracketSpec& even_r12, const Supernumber& f, const Supernumber& g);

/// Compares delta() against even_r12_delta_formula on random homogeneous
/// pairs. Report-only: mismatches are the documented discrepancy.
CheckReport cross_check_div_formula(const CheckParams& params);

}  // namespace snb
