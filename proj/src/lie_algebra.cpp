#include <sstream>

#include "snb/errors.hpp"
#include "snb/lie_construction.hpp"

namespace snb {

namespace {

void check_table(const LieSuperAlgebra::Table& t, std::size_t d, const char* what) {
  if (t.size() != d * d * d) throw SpecError(std::string(what) + " table has wrong size");
}

}  // namespace

LieSuperAlgebra::LieSuperAlgebra(std::string name, std::vector<BasisVector> basis, int epsilon, Table brackets,
                                 std::optional<Table> products)
    : name_(std::move(name)),
      basis_(std::move(basis)),
      epsilon_(epsilon),
      brackets_(std::move(brackets)),
      products_(std::move(products)) {
  const std::size_t d = basis_.size();
  if (d == 0) throw SpecError("algebra needs at least one basis vector");
  if (epsilon_ != 0 && epsilon_ != 1) throw SpecError("epsilon must be 0 or 1");
  for (std::size_t i = 0; i < d; ++i) {
    if (basis_[i].parity != 0 && basis_[i].parity != 1) throw SpecError("basis parity must be 0 or 1");
    if (basis_[i].name.empty()) throw SpecError("empty basis name");
    for (std::size_t j = 0; j < i; ++j)
      if (basis_[j].name == basis_[i].name) throw SpecError("duplicate basis name '" + basis_[i].name + "'");
  }
  check_table(brackets_, d, "bracket");
  if (products_) check_table(*products_, d, "product");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const int sum = basis_[i].parity + basis_[j].parity;
        if (bracket_constant(i, j, k) != 0 && ((sum + epsilon_ + basis_[k].parity) & 1))
          throw SpecError("bracket [" + basis_[i].name + "," + basis_[j].name + "] has a " + basis_[k].name +
                          " component of the wrong parity");
        if (products_ && product_constant(i, j, k) != 0 && ((sum + basis_[k].parity) & 1))
          throw SpecError("product " + basis_[i].name + "*" + basis_[j].name + " has a " + basis_[k].name +
                          " component of the wrong parity");
      }
}

std::size_t LieSuperAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  throw SpecError("unknown basis vector '" + name + "'");
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  coeffs_.assign(algebra_->dim(), Rational(0));
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, std::vector<Rational> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_->dim()) throw SpecError("element dimension does not match the algebra");
}

AlgebraElement AlgebraElement::basis(AlgebraPtr algebra, std::size_t i) {
  AlgebraElement e(std::move(algebra));
  e.coeffs_.at(i) = 1;
  return e;
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Parity AlgebraElement::parity() const {
  bool even = false, odd = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) (algebra_->basis(i).parity ? odd : even) = true;
  if (even && odd) return Parity::Mixed;
  if (odd) return Parity::Odd;
  return even ? Parity::Even : Parity::ZeroAny;
}

void AlgebraElement::require_same(const AlgebraElement& other) const {
  if (algebra_ != other.algebra_) throw SpaceMismatch();
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

AlgebraElement operator*(const Rational& c, AlgebraElement a) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same(b);
  const auto& alg = *a.algebra_;
  if (!alg.has_product()) throw PreconditionError("product structure required");
  AlgebraElement out(a.algebra_);
  const std::size_t d = alg.dim();
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j] == 0) continue;
      const Rational ab = a.coeffs_[i] * b.coeffs_[j];
      for (std::size_t k = 0; k < d; ++k)
        if (alg.product_constant(i, j, k) != 0) out.coeffs_[k] += ab * alg.product_constant(i, j, k);
    }
  }
  return out;
}

AlgebraElement AlgebraElement::signed_by(int exponent) const { return (exponent & 1) ? -*this : *this; }

bool AlgebraElement::operator==(const AlgebraElement& other) const {
  return algebra_ == other.algebra_ && coeffs_ == other.coeffs_;
}

AlgebraElement lie_bracket(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra() != b.algebra()) throw SpaceMismatch();
  const auto& alg = *a.algebra();
  const std::size_t d = alg.dim();
  std::vector<Rational> out(d, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs()[j] == 0) continue;
      const Rational ab = a.coeffs()[i] * b.coeffs()[j];
      for (std::size_t k = 0; k < d; ++k)
        if (alg.bracket_constant(i, j, k) != 0) out[k] += ab * alg.bracket_constant(i, j, k);
    }
  }
  return AlgebraElement(a.algebra(), std::move(out));
}

std::string format(const AlgebraElement& a) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Rational& c = a.coeffs()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    const Rational mag = negative ? Rational(-c) : c;
    if (mag != 1) out << mag.get_str() << '*';
    out << a.algebra()->basis(i).name;
    first = false;
  }
  return first ? "0" : out.str();
}

TauMap::TauMap(AlgebraPtr algebra, std::size_t arity, Components components)
    : algebra_(std::move(algebra)), arity_(arity), components_(std::move(components)) {
  if (arity_ == 0) throw SpecError("tau arity must be at least 1");
  const std::size_t d = algebra_->dim();
  for (auto it = components_.begin(); it != components_.end();) {
    const auto& [idx, value] = *it;
    if (idx.size() != arity_) throw SpecError("tau component has the wrong number of indices");
    if (value.size() != d) throw SpecError("tau component has the wrong dimension");
    int p = 0;
    for (auto i : idx) {
      if (i >= d) throw SpecError("tau component index out of range");
      p += algebra_->basis(i).parity;
    }
    bool zero = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (value[k] == 0) continue;
      zero = false;
      if ((p + algebra_->basis(k).parity) & 1) throw SpecError("tau must have degree 0");
    }
    it = zero ? components_.erase(it) : std::next(it);
  }
}

TauMap TauMap::lie_bracket(AlgebraPtr algebra) {
  const std::size_t d = algebra->dim();
  Components comps;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rational> v(d, Rational(0));
      for (std::size_t k = 0; k < d; ++k) v[k] = algebra->bracket_constant(i, j, k);
      comps.emplace(std::vector<std::size_t>{i, j}, std::move(v));
    }
  return TauMap(std::move(algebra), 2, std::move(comps));
}

AlgebraElement TauMap::operator()(std::span<const AlgebraElement> args) const {
  if (args.size() != arity_) throw ArityError(arity_, args.size());
  for (const auto& a : args)
    if (a.algebra() != algebra_) throw SpaceMismatch();
  AlgebraElement out(algebra_);
  std::vector<Rational> acc = out.coeffs();
  for (const auto& [idx, value] : components_) {
    Rational w = 1;
    for (std::size_t s = 0; s < arity_ && w != 0; ++s) w *= args[s].coeffs()[idx[s]];
    if (w == 0) continue;
    for (std::size_t k = 0; k < value.size(); ++k) acc[k] += w * value[k];
  }
  return AlgebraElement(algebra_, std::move(acc));
}

NaryBracket<AlgebraElement> build_bracket(const TauMap& tau) {
  const std::size_t n = tau.arity() + 1;
  return [tau, n](std::span<const AlgebraElement> args) {
    if (args.size() != n) throw ArityError(n, args.size());
    return lie_bracket(args[0], tau(args.subspan(1)));
  };
}

}  // namespace snb
