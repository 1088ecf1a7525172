#pragma once

#include <cstdint>
#include <random>

#include "snb/graded_algebra.hpp"

namespace snb {

/// Deterministic generator of homogeneous test inputs.
///
/// Engine: std::mt19937_64 seeded with the 64-bit seed (its output sequence
/// is fixed by the C++ standard, so draws are portable). Standard
/// distributions are not used because their output is implementation
/// defined. For every eligible monomial (Grassmann subset of the requested
/// parity in canonical order, then every exponent vector of total degree
/// <= max_degree in lexicographic order) one 64-bit word r is drawn:
///
///   - bit 0 of r clear: the monomial is skipped;
///   - numerator   = {-3,-2,-1,1,2,3}[(r >> 1) % 6];
///   - denominator = ((r >> 8) & 1) ? 2 : 1.
///
/// If every monomial was skipped the whole pass is repeated with the same
/// engine, so the result is never zero.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  Supernumber homogeneous(const SpacePtr& space, int parity, unsigned max_degree);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Throws PreconditionError when parity 1 is requested on a space without
/// fermionic coordinates.
Supernumber random_homogeneous(const SpacePtr& space, int target_parity, unsigned max_bosonic_degree,
                               std::uint64_t seed);

/// Seed of trial `index` derived from a master seed (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace snb
