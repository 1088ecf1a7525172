#include "snb/bracket.hpp"

#include <map>

#include "snb/errors.hpp"

namespace snb {

int SignRule::exponent(std::span<const int> parities) const {
  int e = constant;
  for (std::size_t i = 0; i < slots.size() && i < parities.size(); ++i) e += slots[i] * parities[i];
  return e & 1;
}

BracketSpec::BracketSpec(std::string name, SpacePtr space, std::size_t arity, int epsilon,
                         std::vector<BracketTerm> terms)
    : name_(std::move(name)), space_(std::move(space)), arity_(arity), epsilon_(epsilon), terms_(std::move(terms)) {
  if (!space_) throw SpecError("bracket '" + name_ + "' has no space");
  if (arity_ < 2) throw SpecError("bracket arity must be at least 2");
  if (epsilon_ != 0 && epsilon_ != 1) throw SpecError("epsilon must be 0 or 1");
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const auto& term = terms_[t];
    const std::string where = "bracket '" + name_ + "' term " + std::to_string(t);
    if (term.derivs.size() != arity_) throw SpecError(where + ": derivs length differs from arity");
    if (term.sign.slots.size() != arity_) throw SpecError(where + ": sign slots length differs from arity");
    if (term.sign.constant != 0 && term.sign.constant != 1) throw SpecError(where + ": sign constant must be 0 or 1");
    int shift = 0;
    for (const auto& d : term.derivs) {
      if (d.coord >= space_->size()) throw SpecError(where + ": coordinate index out of range");
      shift += space_->coord(d.coord).parity;
    }
    for (int s : term.sign.slots)
      if (s != 0 && s != 1) throw SpecError(where + ": sign slot coefficients must be 0 or 1");
    if ((shift & 1) != epsilon_)
      throw SpecError(where + ": shifts parity by " + std::to_string(shift & 1) + " but epsilon is " +
                      std::to_string(epsilon_));
  }
}

BracketSpec BracketSpec::with_terms(std::string name, std::vector<BracketTerm> terms) const {
  return BracketSpec(std::move(name), space_, arity_, epsilon_, std::move(terms));
}

namespace {

void require_space(const BracketSpec& spec, std::span<const Supernumber> args) {
  for (const auto& a : args)
    if (!same_space(a.space_ptr(), spec.space())) throw SpaceMismatch();
}

}  // namespace

Supernumber eval_bracket(const BracketSpec& spec, std::span<const Supernumber> args) {
  const std::size_t n = spec.arity();
  if (args.size() != n) throw ArityError(n, args.size());
  require_space(spec, args);

  std::vector<ParityParts> parts;
  parts.reserve(n);
  for (const auto& a : args) parts.push_back(parity_decompose(a));

  // Derivatives of each homogeneous part, computed on first use.
  std::vector<std::map<std::pair<std::size_t, int>, Supernumber>> cache(2 * n);
  auto derivative = [&](std::size_t slot, int bit, const SlotDerivative& d) -> const Supernumber& {
    auto& slot_cache = cache[2 * slot + bit];
    const auto key = std::make_pair(d.coord, static_cast<int>(d.side));
    auto it = slot_cache.find(key);
    if (it == slot_cache.end()) {
      const Supernumber& part = bit ? parts[slot].odd : parts[slot].even;
      it = slot_cache.emplace(key, deriv(part, d.coord, d.side)).first;
    }
    return it->second;
  };

  Supernumber total(spec.space());
  std::vector<int> pattern(n, 0);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    bool empty = false;
    for (std::size_t i = 0; i < n; ++i) {
      pattern[i] = static_cast<int>((code >> i) & 1u);
      const auto& part = pattern[i] ? parts[i].odd : parts[i].even;
      if (part.is_zero()) empty = true;
    }
    if (empty) continue;
    for (const auto& term : spec.terms()) {
      Supernumber product = derivative(0, pattern[0], term.derivs[0]);
      for (std::size_t i = 1; i < n && !product.is_zero(); ++i)
        product = product * derivative(i, pattern[i], term.derivs[i]);
      if (product.is_zero()) continue;
      Rational c = term.coefficient;
      if (term.sign.exponent(pattern)) c = -c;
      total += c * product;
    }
  }
  return total;
}

Supernumber eval_bracket(const BracketSpec& spec, std::initializer_list<Supernumber> args) {
  return eval_bracket(spec, std::span<const Supernumber>(args.begin(), args.size()));
}

Parity bracket_parity(const BracketSpec& spec, std::span<const Supernumber> args) {
  if (args.size() != spec.arity()) throw ArityError(spec.arity(), args.size());
  int total = spec.epsilon();
  for (const auto& a : args) {
    const Parity p = a.parity();
    if (p == Parity::Mixed) throw ParityError("bracket_parity requires homogeneous arguments");
    total += parity_bit(p);
  }
  return (total & 1) ? Parity::Odd : Parity::Even;
}

bool NHVectorField::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

NHVectorField make_field(SpacePtr space, std::vector<Supernumber> components) {
  if (components.size() != space->size()) throw PreconditionError("field needs one component per coordinate");
  // Component X^i carries parity |X| + |z_i|.
  bool seen[2] = {false, false};
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!same_space(components[i].space_ptr(), space)) throw SpaceMismatch();
    const Parity p = components[i].parity();
    if (p == Parity::ZeroAny) continue;
    if (p == Parity::Mixed) {
      seen[0] = seen[1] = true;
      continue;
    }
    seen[(parity_bit(p) + space->coord(i).parity) & 1] = true;
  }
  Parity parity = Parity::ZeroAny;
  if (seen[0] && seen[1]) {
    parity = Parity::Mixed;
  } else if (seen[0]) {
    parity = Parity::Even;
  } else if (seen[1]) {
    parity = Parity::Odd;
  }
  return NHVectorField{std::move(space), std::move(components), parity};
}

NHVectorField nh_field(const BracketSpec& spec, std::span<const Supernumber> args) {
  if (args.size() + 1 != spec.arity()) throw ArityError(spec.arity() - 1, args.size());
  require_space(spec, args);
  const auto& space = spec.space();
  std::vector<Supernumber> full;
  full.reserve(spec.arity());
  full.push_back(Supernumber(space));
  full.insert(full.end(), args.begin(), args.end());
  std::vector<Supernumber> components;
  components.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) {
    full[0] = Supernumber::coordinate(space, i);
    components.push_back(eval_bracket(spec, full));
  }
  return make_field(space, std::move(components));
}

Supernumber apply_field(const NHVectorField& field, const Supernumber& f) {
  if (!same_space(field.space, f.space_ptr())) throw SpaceMismatch();
  Supernumber out(field.space);
  for (std::size_t i = 0; i < field.components.size(); ++i) {
    if (field.components[i].is_zero()) continue;
    out += deriv(f, i, Side::Right) * field.components[i];
  }
  return out;
}

NHVectorField operator*(const NHVectorField& field, const Supernumber& g) {
  std::vector<Supernumber> c;
  c.reserve(field.components.size());
  for (const auto& x : field.components) c.push_back(x * g);
  return make_field(field.space, std::move(c));
}

NHVectorField operator+(const NHVectorField& a, const NHVectorField& b) {
  if (!same_space(a.space, b.space)) throw SpaceMismatch();
  std::vector<Supernumber> c;
  for (std::size_t i = 0; i < a.components.size(); ++i) c.push_back(a.components[i] + b.components[i]);
  return make_field(a.space, std::move(c));
}

NHVectorField operator-(const NHVectorField& a, const NHVectorField& b) {
  if (!same_space(a.space, b.space)) throw SpaceMismatch();
  std::vector<Supernumber> c;
  for (std::size_t i = 0; i < a.components.size(); ++i) c.push_back(a.components[i] - b.components[i]);
  return make_field(a.space, std::move(c));
}

NHVectorField signed_by(const NHVectorField& field, int exponent) {
  if (!(exponent & 1)) return field;
  std::vector<Supernumber> c;
  for (const auto& x : field.components) c.push_back(-x);
  return make_field(field.space, std::move(c));
}

const char* to_string(Convention c) { return c == Convention::AB ? "ab" : "ba"; }

Convention parse_convention(std::string_view text) {
  if (text == "ab" || text == "AB") return Convention::AB;
  if (text == "ba" || text == "BA") return Convention::BA;
  throw PreconditionError("convention must be 'ab' or 'ba'");
}

NHVectorField field_commutator(const NHVectorField& x, const NHVectorField& y, Convention convention) {
  if (!same_space(x.space, y.space)) throw SpaceMismatch();
  if (x.parity == Parity::Mixed || y.parity == Parity::Mixed)
    throw ParityError("field_commutator requires homogeneous fields");
  const int sign = parity_bit(x.parity) * parity_bit(y.parity);
  const NHVectorField& first = convention == Convention::AB ? x : y;
  const NHVectorField& second = convention == Convention::AB ? y : x;
  std::vector<Supernumber> c;
  c.reserve(x.components.size());
  for (std::size_t i = 0; i < x.components.size(); ++i)
    c.push_back(apply_field(first, second.components[i]) -
                apply_field(second, first.components[i]).signed_by(sign));
  return make_field(x.space, std::move(c));
}

}  // namespace snb
