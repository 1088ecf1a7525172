#pragma once

// n-ary super Nambu brackets defined as sums of first-order polydifferential
// terms, and the Nambu-Hamiltonian vector fields they generate.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "snb/graded_algebra.hpp"

namespace snb {

/// Sign (-1)^(constant + sum_i slots[i]*|f_i|) for homogeneous arguments.
struct SignRule {
  int constant = 0;
  std::vector<int> slots;

  int exponent(std::span<const int> parities) const;
};

struct SlotDerivative {
  std::size_t coord = 0;
  Side side = Side::Left;
};

/// sign * coefficient * (D_1 f_1)(D_2 f_2)...(D_n f_n), left to right.
struct BracketTerm {
  Rational coefficient;
  std::vector<SlotDerivative> derivs;
  SignRule sign;
};

class BracketSpec {
 public:
  /// Validates arity, slot counts, coordinate references and that every
  /// term shifts parity by exactly `epsilon` (the number of fermionic
  /// derivatives in a term, mod 2). Throws SpecError.
  BracketSpec(std::string name, SpacePtr space, std::size_t arity, int epsilon,
              std::vector<BracketTerm> terms);

  const std::string& name() const noexcept { return name_; }
  const SpacePtr& space() const noexcept { return space_; }
  std::size_t arity() const noexcept { return arity_; }
  int epsilon() const noexcept { return epsilon_; }
  const std::vector<BracketTerm>& terms() const noexcept { return terms_; }

  /// Copy with a different term list (and name); revalidated.
  BracketSpec with_terms(std::string name, std::vector<BracketTerm> terms) const;

 private:
  std::string name_;
  SpacePtr space_;
  std::size_t arity_;
  int epsilon_;
  std::vector<BracketTerm> terms_;
};

/// Mixed-parity arguments are split into even and odd parts and the bracket
/// is extended multilinearly.
Supernumber eval_bracket(const BracketSpec& spec, std::span<const Supernumber> args);
Supernumber eval_bracket(const BracketSpec& spec, std::initializer_list<Supernumber> args);

/// (epsilon + sum |f_i|) mod 2. Throws ParityError on a mixed argument.
Parity bracket_parity(const BracketSpec& spec, std::span<const Supernumber> args);

/// Component X^i multiplies the right derivative along coordinate z_i:
/// X(f) = sum_i (d_r f / d z_i) X^i.
struct NHVectorField {
  SpacePtr space;
  std::vector<Supernumber> components;
  Parity parity = Parity::ZeroAny;

  bool is_zero() const;
  bool operator==(const NHVectorField& other) const { return components == other.components; }
};

NHVectorField make_field(SpacePtr space, std::vector<Supernumber> components);

/// X^i = {z_i, args...} for the n-1 trailing arguments.
NHVectorField nh_field(const BracketSpec& spec, std::span<const Supernumber> args);

Supernumber apply_field(const NHVectorField& field, const Supernumber& f);

/// Componentwise product X^i * g (right multiplication).
NHVectorField operator*(const NHVectorField& field, const Supernumber& g);
NHVectorField operator+(const NHVectorField& a, const NHVectorField& b);
NHVectorField operator-(const NHVectorField& a, const NHVectorField& b);
NHVectorField signed_by(const NHVectorField& field, int exponent);

/// Composition order used to form a graded commutator of two fields.
///   AB: [X,Y]^i = X(Y^i) - (-1)^{|X||Y|} Y(X^i)
///   BA: [X,Y]^i = Y(X^i) - (-1)^{|X||Y|} X(Y^i)
enum class Convention { AB, BA };
const char* to_string(Convention c);
Convention parse_convention(std::string_view text);

/// Throws ParityError when either field has mixed parity.
NHVectorField field_commutator(const NHVectorField& x, const NHVectorField& y, Convention convention);

// Documents ----------------------------------------------------------------

BracketSpec load_spec(const nlohmann::json& document);
BracketSpec load_spec_file(const std::string& path);
nlohmann::json to_json(const BracketSpec& spec);

/// odd_r21, even_r12, antibracket_r11. Throws SpecError for other names.
BracketSpec builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// Resolves a builtin name, falling back to a spec file path.
BracketSpec resolve_bracket(const std::string& name_or_path);

}  // namespace snb
