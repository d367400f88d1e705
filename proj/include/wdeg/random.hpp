#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wdeg/polynomial.hpp"

namespace wdeg {

/// Seeded generator with bounded draws defined here rather than through
/// std::uniform_int_distribution, whose output differs between standard
/// libraries.  Same seed, same stream, on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Uniform in [lo, hi] \ {0}; requires the range to contain a nonzero.
  std::int64_t nonzero(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

 private:
  std::mt19937_64 engine_;
};

/// Seed for trial t of a campaign seeded with `seed` (splitmix64 mixing).
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t t);

struct RandomPolyShape {
  std::size_t nvars = 2;
  std::uint32_t max_degree = 3;
  std::int64_t coeff_bound = 3;
  std::size_t max_terms = 4;
  /// Variables allowed to appear (bit i for x_{i+1}); all by default.
  std::uint32_t allowed = ~std::uint32_t{0};
  bool allow_constant = true;
};

/// Up to max_terms random terms; may be zero if every drawn term cancels.
Polynomial random_polynomial(Rng& rng, const RandomPolyShape& shape);

/// A random nonzero polynomial (redraws until nonzero).
Polynomial random_nonzero_polynomial(Rng& rng, const RandomPolyShape& shape);

}  // namespace wdeg
