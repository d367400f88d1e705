#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wdeg/gamma.hpp"
#include "wdeg/polynomial.hpp"

namespace wdeg {

/// Phi = sum_i phi_i y^i with phi_i in k[x_1..x_n]: dense in y, sparse in x.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::size_t n) : n_(n) {}
  /// coeffs[i] is the coefficient of y^i; trailing zeros are trimmed.
  UPoly(std::size_t n, std::vector<Polynomial> coeffs);

  /// Splits an (n+1)-variable polynomial along the variable `y_index`.
  static UPoly from_polynomial(const Polynomial& p, std::size_t y_index);
  static UPoly y(std::size_t n);

  std::size_t nvars() const noexcept { return n_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// deg_y; -1 for zero.
  std::int64_t degree() const noexcept {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  /// Coefficient of y^i (zero past the degree).
  Polynomial coefficient(std::size_t i) const;
  std::span<const Polynomial> coefficients() const noexcept { return coeffs_; }

  /// The (n+1)-variable polynomial with y as the last variable.
  Polynomial to_polynomial() const;

  /// order-th derivative in y.
  UPoly derivative(std::uint32_t order = 1) const;

  UPoly operator+(const UPoly& other) const;
  UPoly operator*(const UPoly& other) const;

  bool operator==(const UPoly& other) const = default;

  /// Text with x1..xn and y.
  std::string str() const;
  /// Text with the given names: n coefficient variables, then y.
  std::string str(std::span<const std::string> names) const;

 private:
  void trim();

  std::size_t n_ = 0;
  std::vector<Polynomial> coeffs_;
};

/// Phi(g) = sum phi_i g^i.
Polynomial apply(const UPoly& phi, const Polynomial& g);

/// Maps every coefficient through substitute_vars: turns Phi written over
/// coordinates z_1..z_r into Phi over k[x] given the images of the z's.
UPoly substitute_coefficients(const UPoly& phi,
                              std::span<const Polynomial> images);

/// max_i deg_w(phi_i g^i): the degree Phi(g) would have without
/// cancellation.  -infinity for Phi = 0.
Degree deg_wg(const UPoly& phi, const Polynomial& g, const WeightVector& w);

/// Initial form of Phi viewed in n+1 variables with y weighted deg_w g.
UPoly initial_wg(const UPoly& phi, const Polynomial& g, const WeightVector& w);

enum class MMethod {
  kByDefinition,  ///< first i with no degree drop in (d/dy)^i Phi at g
  kByInitial,     ///< first i with (d/dy)^i (Phi^{w,g}) (g^w) != 0
  kCrossCheck,    ///< both; InternalError if they disagree
};

/// The cancellation depth m_w^g(Phi).
std::uint32_t m_wg(const UPoly& phi, const Polynomial& g, const WeightVector& w,
                   MMethod method = MMethod::kCrossCheck);

/// Four characterizations of "no cancellation", each evaluated on its own.
struct CancellationConditions {
  bool depth_zero = false;         // m_w^g(Phi) = 0
  bool degree_preserved = false;   // deg_w^g Phi = deg_w Phi(g)
  bool initial_nonzero = false;    // Phi^{w,g}(g^w) != 0
  bool initial_matches = false;    // Phi(g) != 0 and Phi(g)^w = Phi^{w,g}(g^w)
  bool all_equivalent = false;
};

CancellationConditions cancellation_conditions(const UPoly& phi,
                                               const Polynomial& g,
                                               const WeightVector& w);

}  // namespace wdeg
