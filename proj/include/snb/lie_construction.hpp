#pragma once

// Finite-dimensional Lie superalgebras given by structure constants, skew
// maps tau on them, and the n-bracket {a_1,..,a_n} = [a_1, tau(a_2..a_n)].

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "snb/check_report.hpp"
#include "snb/graded_algebra.hpp"
#include "snb/identities.hpp"

namespace snb {

struct BasisVector {
  std::string name;
  int parity = 0;
};

class LieSuperAlgebra {
 public:
  /// Dense d*d*d table, entry (i*d + j)*d + k.
  using Table = std::vector<Rational>;

  /// Checks dimensions and that every nonzero constant respects parity:
  /// |e_k| = |e_i| + |e_j| + epsilon for brackets, without epsilon for
  /// products. Throws SpecError. Antisymmetry and Jacobi are checked by
  /// validate_algebra, not here.
  LieSuperAlgebra(std::string name, std::vector<BasisVector> basis, int epsilon, Table brackets,
                  std::optional<Table> products = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<BasisVector>& basis() const noexcept { return basis_; }
  const BasisVector& basis(std::size_t i) const { return basis_.at(i); }
  int epsilon() const noexcept { return epsilon_; }
  std::size_t index_of(const std::string& name) const;

  const Rational& bracket_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return brackets_[(i * dim() + j) * dim() + k];
  }
  bool has_product() const noexcept { return products_.has_value(); }
  const Rational& product_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return (*products_)[(i * dim() + j) * dim() + k];
  }

 private:
  std::string name_;
  std::vector<BasisVector> basis_;
  int epsilon_;
  Table brackets_;
  std::optional<Table> products_;
};

using AlgebraPtr = std::shared_ptr<const LieSuperAlgebra>;

class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraPtr algebra);
  AlgebraElement(AlgebraPtr algebra, std::vector<Rational> coeffs);
  static AlgebraElement basis(AlgebraPtr algebra, std::size_t i);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;
  Parity parity() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a);
  /// Associative product; throws PreconditionError without product constants.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  AlgebraElement signed_by(int exponent) const;
  bool operator==(const AlgebraElement& other) const;

 private:
  void require_same(const AlgebraElement& other) const;

  AlgebraPtr algebra_;
  std::vector<Rational> coeffs_;
};

AlgebraElement lie_bracket(const AlgebraElement& a, const AlgebraElement& b);
/// "e1 - 2*e3 + 1/2*e2" in basis order; "0" for zero.
std::string format(const AlgebraElement& a);

/// Degree-0 multilinear map g^{arity} -> g given on basis tuples.
class TauMap {
 public:
  using Components = std::map<std::vector<std::size_t>, std::vector<Rational>>;

  /// Throws SpecError on bad indices, arity 0 or a component that breaks
  /// degree 0.
  TauMap(AlgebraPtr algebra, std::size_t arity, Components components);
  /// tau(a, b) = [a, b]; requires epsilon = 0 for degree 0.
  static TauMap lie_bracket(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  std::size_t arity() const noexcept { return arity_; }
  const Components& components() const noexcept { return components_; }

  AlgebraElement operator()(std::span<const AlgebraElement> args) const;

 private:
  AlgebraPtr algebra_;
  std::size_t arity_;
  Components components_;
};

/// {a_1..a_n} = [a_1, tau(a_2..a_n)] with n = tau.arity() + 1. The returned
/// function throws ArityError on a wrong argument count.
NaryBracket<AlgebraElement> build_bracket(const TauMap& tau);

/// Graded antisymmetry and graded Jacobi on all basis pairs and triples.
CheckReport validate_algebra(const LieSuperAlgebra& algebra);

/// Sign placement in the invariance condition
///   [a, tau(b_1..b_m)] = sum_i (-1)^{s_i} tau(b_1,..,[a,b_i],..,b_m)
///   PerSummand:  s_i = (|a|+eps) sum_{j>i} |b_j|
///   SignOutside: s_i = (|a|+eps) sum_{j>1} |b_j| for every i
///   KoszulLeft:  s_i = (|a|+eps) sum_{j<i} |b_j|
enum class TauReading { PerSummand, SignOutside, KoszulLeft };
const char* to_string(TauReading r);
TauReading parse_tau_reading(const std::string& text);

/// Skew-symmetry of tau and its invariance under ad on basis tuples, with
/// `reading` asserted. details.readings counts the tuples on which each
/// reading holds; details.only_other_reading lists the readings that
/// validate when the asserted one does not.
CheckReport validate_tau(const TauMap& tau, TauReading reading = TauReading::PerSummand);

/// Skew-symmetry in slots 2..n and the fundamental identity of the built
/// bracket, exhaustively on basis tuples and on params.samples random
/// homogeneous combinations per parity pattern. Throws PreconditionError if
/// validate_algebra or validate_tau (under `reading`) fails.
CheckReport check_built_bracket(const TauMap& tau, const CheckParams& params,
                           TauReading reading = TauReading::PerSummand);

/// Probes sum_{i<n} (-1)^{i+1} tau(a_1,..,a_i a_{i+1},..,a_n)
///   + (-1)^{n + |a_n| sum_{i<n}|a_i|} tau(a_n a_1, a_2,..,a_{n-1}) = 0
/// on basis tuples (n = arity + 1). Report-only; details.per_tuple lists
/// each tuple with the outcome of this sign and of the opposite last sign.
/// Throws PreconditionError("product structure required") without products.
CheckReport check_tau_cyclic(const TauMap& tau, const CheckParams& params);

/// Report-only: whether the span of tau-values on basis tuples is closed
/// under the Lie bracket.
CheckReport check_tau_span_closure(const TauMap& tau);

/// Report-only: the product-of-brackets skew property for ternary built
/// brackets on basis tuples. Needs product constants; reports a note
/// otherwise.
CheckReport probe_built_generalized_skew(const TauMap& tau);

// Documents ----------------------------------------------------------------
//   algebra: {"name", "epsilon", "basis": [{"name","parity"}],
//             "brackets": ["ei ej ek p/q", ...], "products": [...]}
//   tau:     {"kind": "bracket"} or
//            {"arity": m, "components": ["ei1 .. eim ek p/q", ...]}
AlgebraPtr load_algebra(const nlohmann::json& document);
AlgebraPtr load_algebra_file(const std::string& path);
nlohmann::json to_json(const LieSuperAlgebra& algebra);
TauMap load_tau(const nlohmann::json& document, AlgebraPtr algebra);
/// "bracket" selects the Lie bracket; anything else is read as a file.
TauMap resolve_tau(const std::string& keyword_or_path, AlgebraPtr algebra);

/// abelian, so3, heisenberg, super21, gl2. Throws SpecError otherwise.
AlgebraPtr example_algebra(const std::string& name);
std::vector<std::string> example_algebra_names();
/// A tau shipped with each example algebra.
TauMap example_tau(const std::string& name);

}  // namespace snb
