#include <bit>

#include "snb/errors.hpp"
#include "snb/graded_algebra.hpp"

namespace snb {

int Monomial::parity() const noexcept { return std::popcount(odd_mask) & 1; }

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const noexcept {
  if (a.odd_mask != b.odd_mask) {
    // Lexicographic on ascending index lists: below the lowest differing bit
    // both lists agree. The list holding that bit is smaller unless the
    // other list ends there (a proper prefix sorts first).
    const std::uint64_t diff = a.odd_mask ^ b.odd_mask;
    const int k = std::countr_zero(diff);
    const bool a_has = (a.odd_mask >> k) & 1u;
    const std::uint64_t other = a_has ? b.odd_mask : a.odd_mask;
    const bool other_continues = k < 63 && (other >> (k + 1)) != 0;
    return a_has == other_continues;
  }
  return a.exponents < b.exponents;
}

std::pair<int, std::uint64_t> merge_odd(std::uint64_t left, std::uint64_t right) noexcept {
  if (left & right) return {0, 0};
  int inversions = 0;
  for (std::uint64_t r = right; r != 0; r &= r - 1) {
    const int b = std::countr_zero(r);
    if (b < 63) inversions += std::popcount(left >> (b + 1));
  }
  return {(inversions & 1) ? -1 : 1, left | right};
}

Supernumber::Supernumber(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw PreconditionError("supernumber requires a graded space");
}

Supernumber::Supernumber(SpacePtr space, TermMap terms) : Supernumber(std::move(space)) {
  for (auto& [m, c] : terms) {
    if (m.exponents.size() != space_->bosonic_count())
      throw PreconditionError("monomial exponent vector does not match the space");
    if (space_->fermionic_count() < 64 && (m.odd_mask >> space_->fermionic_count()) != 0)
      throw PreconditionError("monomial references a fermionic slot outside the space");
    if (c != 0) terms_.emplace(m, c);
  }
}

Supernumber Supernumber::constant(SpacePtr space, const Rational& value) {
  Supernumber s(std::move(space));
  if (value != 0) s.terms_.emplace(Monomial{0, std::vector<std::uint32_t>(s.space_->bosonic_count(), 0)}, value);
  return s;
}

Supernumber Supernumber::coordinate(SpacePtr space, std::size_t index) {
  Supernumber s(std::move(space));
  Monomial m{0, std::vector<std::uint32_t>(s.space_->bosonic_count(), 0)};
  const auto& c = s.space_->coord(index);
  if (c.parity == 0) {
    m.exponents[s.space_->slot(index)] = 1;
  } else {
    m.odd_mask = std::uint64_t{1} << s.space_->slot(index);
  }
  s.terms_.emplace(std::move(m), Rational(1));
  return s;
}

Supernumber Supernumber::coordinate(SpacePtr space, std::string_view name) {
  const auto index = space->index_of(name);
  return coordinate(std::move(space), index);
}

Parity Supernumber::parity() const {
  if (terms_.empty()) return Parity::ZeroAny;
  const int first = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_)
    if (m.parity() != first) return Parity::Mixed;
  return first ? Parity::Odd : Parity::Even;
}

unsigned Supernumber::bosonic_degree() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) {
    unsigned d = 0;
    for (auto e : m.exponents) d += e;
    best = std::max(best, d);
  }
  return best;
}

void Supernumber::require_same_space(const Supernumber& other) const {
  if (!same_space(space_, other.space_)) throw SpaceMismatch();
}

Supernumber Supernumber::operator-() const {
  Supernumber r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Supernumber& Supernumber::operator+=(const Supernumber& other) {
  require_same_space(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Supernumber& Supernumber::operator-=(const Supernumber& other) {
  require_same_space(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Supernumber operator*(const Supernumber& a, const Supernumber& b) {
  a.require_same_space(b);
  Supernumber r(a.space_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto [sign, mask] = merge_odd(ma.odd_mask, mb.odd_mask);
      if (sign == 0) continue;
      Monomial m{mask, ma.exponents};
      for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += mb.exponents[i];
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      auto [it, inserted] = r.terms_.try_emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Supernumber operator*(const Rational& c, const Supernumber& a) {
  Supernumber r(a.space_);
  if (c == 0) return r;
  for (const auto& [m, v] : a.terms_) r.terms_.emplace(m, c * v);
  return r;
}

Supernumber Supernumber::signed_by(int exponent) const { return (exponent & 1) ? -*this : *this; }

bool Supernumber::operator==(const Supernumber& other) const {
  return same_space(space_, other.space_) && terms_ == other.terms_;
}

Supernumber add(const Supernumber& a, const Supernumber& b) { return a + b; }
Supernumber mul(const Supernumber& a, const Supernumber& b) { return a * b; }
Parity parity(const Supernumber& s) { return s.parity(); }

ParityParts parity_decompose(const Supernumber& s) {
  Supernumber::TermMap even, odd;
  for (const auto& [m, c] : s.terms()) (m.parity() ? odd : even).emplace(m, c);
  return {Supernumber(s.space_ptr(), std::move(even)), Supernumber(s.space_ptr(), std::move(odd))};
}

Supernumber deriv(const Supernumber& s, std::size_t coord, Side side) {
  const auto& space = s.space();
  if (coord >= space.size()) throw UnknownCoordinate("#" + std::to_string(coord));
  const std::size_t slot = space.slot(coord);
  Supernumber::TermMap out;
  if (space.coord(coord).parity == 0) {
    for (const auto& [m, c] : s.terms()) {
      const auto e = m.exponents[slot];
      if (e == 0) continue;
      Monomial d = m;
      --d.exponents[slot];
      out.emplace(std::move(d), c * e);
    }
  } else {
    const std::uint64_t bit = std::uint64_t{1} << slot;
    for (const auto& [m, c] : s.terms()) {
      if (!(m.odd_mask & bit)) continue;
      const int before = std::popcount(m.odd_mask & (bit - 1));
      const int total = std::popcount(m.odd_mask);
      const int moves = side == Side::Left ? before : total - 1 - before;
      Monomial d = m;
      d.odd_mask &= ~bit;
      out.emplace(std::move(d), (moves & 1) ? Rational(-c) : c);
    }
  }
  return Supernumber(s.space_ptr(), std::move(out));
}

Supernumber deriv(const Supernumber& s, std::string_view coord, Side side) {
  return deriv(s, s.space().index_of(coord), side);
}

}  // namespace snb
