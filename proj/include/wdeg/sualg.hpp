#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wdeg/gamma.hpp"
#include "wdeg/groebner.hpp"
#include "wdeg/polynomial.hpp"

namespace wdeg {

/// g^l_fg = alpha * f^l_gf for dependent homogeneous f, g of positive degree.
struct HomogPairData {
  std::uint64_t l_fg = 0;
  std::uint64_t l_gf = 0;
  Rational alpha;
};

/// Exponents come from l_fg * deg g = l_gf * deg f (for Gamma = Z this is
/// l_fg = deg f / gcd(deg f, deg g)); alpha by comparing one coefficient.
/// InputError unless f, g are homogeneous, of positive degree and
/// dependent; InternalError if the identity then fails.
HomogPairData homogeneous_pair(const Polynomial& f, const Polynomial& g,
                               const WeightVector& w);

struct FieldExtension {
  bool algebraic = false;
  /// [k(h^w)(g^w) : k(h^w)], set when algebraic.
  std::uint32_t degree = 0;
  /// deg h / gcd(deg h, deg g) when r = 1, Gamma = Z and both degrees of
  /// the initial forms are positive.  Always equal to degree when set.
  std::optional<std::uint32_t> gcd_formula;
};

/// Degree of g^w over the fraction field of k[h_1^w..h_r^w].  InputError if
/// the initial forms of the h's are dependent or g = 0.
FieldExtension field_ext_degree(std::span<const Polynomial> hs,
                                const Polynomial& g, const WeightVector& w,
                                const GroebnerOptions& options = {});

/// (g_1^w..g_r^w), after checking that they are independent (InputError
/// otherwise).
std::vector<Polynomial> initial_algebra_gens(std::span<const Polynomial> gs,
                                             const WeightVector& w);

struct InitialGeneration {
  bool independent = false;
  bool initials_generate = false;
  bool equivalent = false;
};

/// For f with k[f] = k[x]: are the initials independent, and do they
/// generate k[x]?  The two answers must agree.
InitialGeneration initial_generation_check(std::span<const Polynomial> fs,
                                           const WeightVector& w,
                                           const GroebnerOptions& options = {});

}  // namespace wdeg
