#include "snb/sampler.hpp"

#include <algorithm>
#include <bit>

#include "snb/errors.hpp"

namespace snb {

namespace {

void exponent_vectors(std::size_t vars, unsigned max_degree, std::vector<std::uint32_t>& current,
                      unsigned used, std::vector<std::vector<std::uint32_t>>& out) {
  if (current.size() == vars) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e + used <= max_degree; ++e) {
    current.push_back(e);
    exponent_vectors(vars, max_degree, current, used + e, out);
    current.pop_back();
  }
}

}  // namespace

Supernumber Sampler::homogeneous(const SpacePtr& space, int parity, unsigned max_degree) {
  const std::size_t q = space->fermionic_count();
  if (parity == 1 && q == 0) throw PreconditionError("odd sample requested on a space with no fermionic coordinates");
  if (q > 20) throw PreconditionError("random sampling supports at most 20 fermionic coordinates");

  std::vector<Monomial> eligible;
  {
    std::vector<std::vector<std::uint32_t>> exps;
    std::vector<std::uint32_t> scratch;
    exponent_vectors(space->bosonic_count(), max_degree, scratch, 0, exps);
    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask)
      if ((std::popcount(mask) & 1) == parity) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
      return MonomialLess{}(Monomial{a, {}}, Monomial{b, {}});
    });
    for (auto mask : masks)
      for (const auto& e : exps) eligible.push_back(Monomial{mask, e});
  }

  static constexpr int kNumerators[6] = {-3, -2, -1, 1, 2, 3};
  for (;;) {
    Supernumber::TermMap terms;
    for (const auto& m : eligible) {
      const std::uint64_t r = engine_();
      if (!(r & 1u)) continue;
      const int num = kNumerators[(r >> 1) % 6];
      const int den = ((r >> 8) & 1u) ? 2 : 1;
      Rational c(num, den);
      c.canonicalize();
      terms.emplace(m, c);
    }
    if (!terms.empty()) return Supernumber(space, std::move(terms));
  }
}

Supernumber random_homogeneous(const SpacePtr& space, int target_parity, unsigned max_bosonic_degree,
                               std::uint64_t seed) {
  Sampler sampler(seed);
  return sampler.homogeneous(space, target_parity, max_bosonic_degree);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace snb
