#pragma once

// Reference implementations used to check the library.  Nothing here calls
// into the algorithms under test: polynomials are re-implemented as plain
// exponent maps and everything is computed from first principles.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wdeg/polynomial.hpp"
#include "wdeg/upoly.hpp"

namespace oracle {

using Exponents = std::vector<int>;

struct OPoly {
  int n = 0;
  std::map<Exponents, mpq_class> terms;

  OPoly() = default;
  explicit OPoly(int nvars) : n(nvars) {}
  static OPoly constant(int n, const mpq_class& c);
  static OPoly var(int n, int i);

  bool zero() const { return terms.empty(); }
  OPoly operator+(const OPoly& o) const;
  OPoly operator-(const OPoly& o) const;
  OPoly operator*(const OPoly& o) const;
  OPoly scaled(const mpq_class& c) const;
  OPoly pow(int e) const;
  OPoly diff(int i) const;
  mpq_class eval(const std::vector<mpq_class>& point) const;
  /// Substitutes x_i -> images[i].
  OPoly compose(const std::vector<OPoly>& images) const;
  bool operator==(const OPoly& o) const { return n == o.n && terms == o.terms; }
};

OPoly from_library(const wdeg::Polynomial& p);
/// Integer weights only; nullopt for the zero polynomial.
std::optional<std::int64_t> weighted_degree(const OPoly& p, const std::vector<std::int64_t>& w);
int total_degree(const OPoly& p);

/// Rank of the Jacobian matrix at a point, by exact elimination.
int jacobian_rank_at(const std::vector<OPoly>& fs, const std::vector<mpq_class>& point);

/// Generic Jacobian rank == count, estimated as the maximum rank over
/// several integer points from a fixed seed.
bool independent_by_rank(const std::vector<OPoly>& fs, std::uint64_t seed = 1);

/// Res_t(p(t) - y1, q(t) - y2) as a polynomial in (y1, y2); p, q are
/// coefficient lists of univariate polynomials (constant term first).
OPoly resultant_kernel(const std::vector<mpq_class>& p, const std::vector<mpq_class>& q);

/// True iff a = c * b for some nonzero rational c.
bool proportional(const OPoly& a, const OPoly& b);

/// Phi as a list of OPoly coefficients in y.
std::vector<OPoly> from_library(const wdeg::UPoly& phi);

/// max_i deg_w(phi_i g^i), expanded literally.
std::optional<std::int64_t> deg_wg(const std::vector<OPoly>& phi, const OPoly& g,
                                   const std::vector<std::int64_t>& w);

/// m by the defining minimum over y-derivatives.
int m_by_definition(std::vector<OPoly> phi, const OPoly& g, const std::vector<std::int64_t>& w);

}  // namespace oracle
