#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wdeg/gamma.hpp"
#include "wdeg/groebner.hpp"
#include "wdeg/polynomial.hpp"
#include "wdeg/upoly.hpp"

namespace wdeg {

/// A named intermediate: a degree or a plain integer (m, a, b, N, ...).
using Quantity = std::variant<Degree, std::int64_t>;

/// Evidence for one inequality: both sides, everything computed on the way,
/// and the facts established in the proof that can be checked directly.
struct IneqReport {
  std::string name;
  Degree lhs;
  Degree rhs;
  bool holds = false;  // lhs >= rhs
  /// The right side is -infinity because M is (m or a >= 1 times) -infinity.
  bool degenerate = false;
  std::vector<std::pair<std::string, Quantity>> intermediates;
  /// Polynomials worth showing (P, Q, Phi), printed.
  std::vector<std::pair<std::string, std::string>> polynomials;
  std::vector<std::pair<std::string, bool>> side_checks;

  void put(std::string key, Quantity value);
  void note(std::string key, std::string text);
  void check(std::string key, bool ok);
  const Quantity* find(std::string_view key) const;
  bool side_checks_pass() const;
  /// The inequality and every side check.
  bool verdict() const { return holds && side_checks_pass(); }
};

/// deg Phi(g) >= deg_w^g Phi + m * M with M = deg(w ^ dg) - deg w - deg g
/// and w = df_1 ^ ... ^ df_r.  phi_z has coefficients in z_1..z_r, which
/// stand for f_1..f_r.
IneqReport check_main_inequality(std::span<const Polynomial> fs,
                                 const UPoly& phi_z, const Polynomial& g,
                                 const WeightVector& w);

/// deg Phi(g) >= deg_y(Phi) deg g + a M = a(N deg g + M) + b deg g, where
/// N = [K^w(g^w) : K^w] and deg_y Phi = aN + b.
IneqReport check_degree_quotient_bound(std::span<const Polynomial> fs,
                                       const UPoly& phi_z, const Polynomial& g,
                                       const WeightVector& w,
                                       const GroebnerOptions& options = {});

/// deg Phi(g) >= m (deg_w^g P + M) with P the minimal annihilating
/// polynomial of g^w over k[f^w]; the right side is 0 when g^w is
/// transcendental.
IneqReport check_annihilator_bound(std::span<const Polynomial> fs,
                                   const UPoly& phi_z, const Polynomial& g,
                                   const WeightVector& w,
                                   const GroebnerOptions& options = {});

/// Two-polynomial form over Gamma = Z: deg Phi(g) >= a(lcm + M) + b deg g,
/// with a, b from deg_y Phi divided by deg f / gcd(deg f, deg g).
IneqReport check_lcm_bound(const Polynomial& f, const UPoly& phi_z,
                           const Polynomial& g, const WeightVector& w,
                           const GroebnerOptions& options = {});

struct DeltaData {
  /// Generator of the kernel of y_i -> f_i^w, grevlex-monic.
  Polynomial q;
  /// (deg_w f_1, ..., deg_w f_n).
  WeightVector w_f;
  Degree delta;
  /// First (n-1)-subset, in lexicographic order, with independent initials.
  std::vector<std::size_t> subset;
  /// The index left out of `subset`.
  std::size_t complement = 0;
};

/// The w_f-degree of Q.  InputError unless the initials have transcendence
/// degree exactly n - 1.
DeltaData delta_invariant(std::span<const Polynomial> fs, const WeightVector& w,
                          const GroebnerOptions& options = {});

/// sum deg f_i >= Delta + sum w - max w for an automorphism f and w >= 0.
/// `inverse` (x_i = inverse_i(f)) is verified when given; otherwise it is
/// computed by subalgebra membership, which also certifies k[f] = k[x].
IneqReport check_automorphism_bound(
    std::span<const Polynomial> fs, const WeightVector& w,
    std::optional<std::span<const Polynomial>> inverse = std::nullopt,
    const GroebnerOptions& options = {});

struct PlaneBoundResult {
  /// False when the initials are independent (nothing to check).
  bool applicable = false;
  IneqReport report;
  bool divisibility = false;
  bool verdict() const { return !applicable || (report.verdict() && divisibility); }
};

/// deg f_1 + deg f_2 >= lcm(deg f_1, deg f_2) + min w for a plane
/// automorphism with dependent initials, plus the divisibility consequence.
PlaneBoundResult check_plane_bound(const Polynomial& f1, const Polynomial& f2,
                                   const WeightVector& w,
                                   const GroebnerOptions& options = {});

}  // namespace wdeg
