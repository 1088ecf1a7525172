#pragma once

// Polynomials over commuting (bosonic) and anticommuting (fermionic)
// coordinates with exact rational coefficients.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace snb {

using Rational = mpq_class;

enum class Side { Left, Right };

/// Grassmann parity of a value. The zero polynomial is homogeneous of every
/// parity and reports ZeroAny.
enum class Parity { Even, Odd, Mixed, ZeroAny };

const char* to_string(Parity p);
const char* to_string(Side s);

/// Parity of a homogeneous value as 0/1; ZeroAny maps to `zero_as`.
/// Throws ParityError for Mixed.
int parity_bit(Parity p, int zero_as = 0);

struct Coordinate {
  std::string name;
  int parity = 0;  // 0 bosonic, 1 fermionic

  bool operator==(const Coordinate&) const = default;
};

/// Ordered coordinate list of R^{p|q}. The order fixes the canonical monomial
/// order; bosonic coordinates are numbered into an exponent vector and
/// fermionic ones into a bit mask, each in declaration order.
class GradedSpace {
 public:
  explicit GradedSpace(std::vector<Coordinate> coords);

  /// Parses the `name:b,name:f,...` declaration form.
  static std::shared_ptr<const GradedSpace> parse(std::string_view declaration);

  std::size_t size() const noexcept { return coords_.size(); }
  const Coordinate& coord(std::size_t i) const { return coords_.at(i); }
  const std::vector<Coordinate>& coords() const noexcept { return coords_; }

  std::size_t bosonic_count() const noexcept { return bosonic_.size(); }
  std::size_t fermionic_count() const noexcept { return fermionic_.size(); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UnknownCoordinate.
  std::size_t index_of(std::string_view name) const;

  /// Position of coordinate `i` inside the exponent vector (bosonic) or the
  /// fermionic mask (fermionic).
  std::size_t slot(std::size_t i) const { return slot_.at(i); }
  /// Coordinate index of the j-th bosonic / fermionic coordinate.
  std::size_t bosonic_coord(std::size_t j) const { return bosonic_.at(j); }
  std::size_t fermionic_coord(std::size_t j) const { return fermionic_.at(j); }

  std::string declaration() const;

  bool operator==(const GradedSpace& other) const { return coords_ == other.coords_; }

 private:
  std::vector<Coordinate> coords_;
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> bosonic_;
  std::vector<std::size_t> fermionic_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

bool same_space(const SpacePtr& a, const SpacePtr& b);

struct Monomial {
  std::uint64_t odd_mask = 0;            // set of fermionic factors, ascending
  std::vector<std::uint32_t> exponents;  // one per bosonic coordinate

  int parity() const noexcept;
  bool operator==(const Monomial&) const = default;
};

/// Canonical order: Grassmann subset compared lexicographically as ascending
/// index lists, then the exponent vector lexicographically.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sign and product of two fermionic factor sets; sign 0 when they overlap.
std::pair<int, std::uint64_t> merge_odd(std::uint64_t left, std::uint64_t right) noexcept;

class Supernumber {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  explicit Supernumber(SpacePtr space);
  /// Zero coefficients are dropped.
  Supernumber(SpacePtr space, TermMap terms);

  static Supernumber constant(SpacePtr space, const Rational& value);
  static Supernumber coordinate(SpacePtr space, std::string_view name);
  static Supernumber coordinate(SpacePtr space, std::size_t index);

  const GradedSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  Parity parity() const;
  /// Largest total bosonic degree among the terms (0 for zero).
  unsigned bosonic_degree() const;

  Supernumber operator-() const;
  Supernumber& operator+=(const Supernumber& other);
  Supernumber& operator-=(const Supernumber& other);

  friend Supernumber operator+(Supernumber a, const Supernumber& b) { return a += b; }
  friend Supernumber operator-(Supernumber a, const Supernumber& b) { return a -= b; }
  friend Supernumber operator*(const Supernumber& a, const Supernumber& b);
  friend Supernumber operator*(const Rational& c, const Supernumber& a);

  /// Multiplies by (-1)^exponent.
  Supernumber signed_by(int exponent) const;

  bool operator==(const Supernumber& other) const;

 private:
  void require_same_space(const Supernumber& other) const;

  SpacePtr space_;
  TermMap terms_;
};

Supernumber add(const Supernumber& a, const Supernumber& b);
Supernumber mul(const Supernumber& a, const Supernumber& b);
Parity parity(const Supernumber& s);

struct ParityParts {
  Supernumber even;
  Supernumber odd;
};
ParityParts parity_decompose(const Supernumber& s);

Supernumber deriv(const Supernumber& s, std::size_t coord, Side side);
Supernumber deriv(const Supernumber& s, std::string_view coord, Side side);

/// Expression grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*      division only by constants
///   factor := base ('^' NAT)?
///   base   := NAT | NAME | '(' expr ')'
Supernumber parse(std::string_view text, const SpacePtr& space);
std::string format(const Supernumber& s);

}  // namespace snb
