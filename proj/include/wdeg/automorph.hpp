#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "wdeg/polynomial.hpp"

namespace wdeg {

/// x_index -> alpha * x_index + shift, other variables fixed.
struct ElementaryStep {
  std::size_t index = 0;
  Rational alpha;
  Polynomial shift;
};

/// x_i -> sum_j matrix[i][j] x_j + offset[i].
struct AffineStep {
  std::vector<std::vector<Rational>> matrix;
  std::vector<Rational> offset;
};

using GeneratorStep = std::variant<ElementaryStep, AffineStep>;

/// A polynomial map x -> (f_1(x), ..., f_n(x)).  Maps built from generators
/// keep the generator log, outermost first, so the inverse can be rebuilt.
class PolyMap {
 public:
  PolyMap() = default;
  /// An untracked map (no provenance, not known to be tame).
  explicit PolyMap(std::vector<Polynomial> images);
  static PolyMap identity(std::size_t n);

  std::size_t nvars() const noexcept { return images_.size(); }
  std::span<const Polynomial> images() const noexcept { return images_; }
  const Polynomial& operator[](std::size_t i) const { return images_[i]; }
  std::span<const GeneratorStep> provenance() const noexcept { return provenance_; }
  bool is_tame() const noexcept { return tame_; }

  /// Inverse rebuilt from the generator log; InputError for untracked maps.
  PolyMap inverse() const;

  /// Compares images only.
  bool operator==(const PolyMap& other) const { return images_ == other.images_; }

 private:
  friend PolyMap elementary(std::size_t, std::size_t, const Rational&, const Polynomial&);
  friend PolyMap affine(std::vector<std::vector<Rational>>, std::vector<Rational>);
  friend PolyMap compose(const PolyMap&, const PolyMap&);

  std::vector<Polynomial> images_;
  std::vector<GeneratorStep> provenance_;
  bool tame_ = false;
};

/// InputError if shift involves x_l or alpha = 0.  l is zero-based.
PolyMap elementary(std::size_t n, std::size_t l, const Rational& alpha,
                   const Polynomial& shift);

/// InputError if the matrix is singular or shapes disagree.
PolyMap affine(std::vector<std::vector<Rational>> matrix, std::vector<Rational> offset);

/// (sigma o tau)(x) = sigma(tau(x)): component i is sigma_i(tau_1..tau_n).
PolyMap compose(const PolyMap& sigma, const PolyMap& tau);

/// det(d sigma_i / d x_j) by cofactor expansion.
Polynomial jacobian_det(const PolyMap& sigma);

/// Exact determinant of a rational matrix (Gaussian elimination).
Rational determinant(std::vector<std::vector<Rational>> matrix);

/// The Nagata map on k[x1, x2, x3] and its inverse.
PolyMap nagata();
PolyMap nagata_inverse();

/// Composition of `steps` random generators (half elementary, half affine).
/// A step pushing any image above `degree_cap` is redrawn.
PolyMap random_tame(std::size_t n, std::size_t steps, std::uint32_t deg_bound,
                    std::int64_t coeff_bound, std::uint64_t seed,
                    std::uint32_t degree_cap = 60);

struct DegreeDivisibility {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  bool divisible = false;
};

/// Total degrees of a plane automorphism and whether one divides the other.
DegreeDivisibility check_degree_divisibility(const PolyMap& sigma);

}  // namespace wdeg
