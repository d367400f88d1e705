#include "wdeg/random.hpp"

#include "wdeg/errors.hpp"

namespace wdeg {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("empty random range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

std::int64_t Rng::nonzero(std::int64_t lo, std::int64_t hi) {
  if (lo == 0 && hi == 0) throw InputError("range contains only zero");
  for (;;) {
    const std::int64_t v = uniform(lo, hi);
    if (v != 0) return v;
  }
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
}

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t t) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (t + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Polynomial random_polynomial(Rng& rng, const RandomPolyShape& shape) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < shape.nvars; ++i) {
    if (shape.allowed >> i & 1U) vars.push_back(i);
  }
  const std::size_t terms =
      static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(shape.max_terms)));
  PolynomialBuilder b(shape.nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    Monomial m(shape.nvars);
    if (!vars.empty()) {
      const std::int64_t lo = shape.allow_constant ? 0 : 1;
      const std::int64_t deg = rng.uniform(std::min<std::int64_t>(lo, shape.max_degree),
                                           shape.max_degree);
      for (std::int64_t k = 0; k < deg; ++k) {
        const std::size_t v = vars[static_cast<std::size_t>(
            rng.uniform(0, static_cast<std::int64_t>(vars.size()) - 1))];
        ++m[v];
      }
    }
    b.add(m, Rational(rng.nonzero(-shape.coeff_bound, shape.coeff_bound)));
  }
  return std::move(b).build();
}

Polynomial random_nonzero_polynomial(Rng& rng, const RandomPolyShape& shape) {
  for (;;) {
    Polynomial p = random_polynomial(rng, shape);
    if (!p.is_zero()) return p;
  }
}

}  // namespace wdeg
