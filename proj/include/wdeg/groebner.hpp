#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wdeg/polynomial.hpp"
#include "wdeg/upoly.hpp"

namespace wdeg {

/// A monomial order usable by the Groebner engine.
class MonomialOrder {
 public:
  enum class Kind {
    kGrevlex,
    kLex,
    /// The first `block` variables are compared first (grevlex inside the
    /// block), ties broken by grevlex on the remaining variables.  Any
    /// polynomial whose leading monomial avoids the block avoids it
    /// entirely, which is what elimination needs.
    kElimination,
  };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  static MonomialOrder elimination(std::size_t block) {
    return MonomialOrder(Kind::kElimination, block);
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }

  /// <0, 0, >0 as a is smaller than, equal to, larger than b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;

  bool operator==(const MonomialOrder& other) const = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_;
  std::size_t block_;
};

/// An ideal given by generators in a fixed ring.  Zero generators are
/// dropped on construction.
class Ideal {
 public:
  explicit Ideal(std::size_t nvars) : nvars_(nvars) {}
  Ideal(std::size_t nvars, std::vector<Polynomial> generators);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return generators_.empty(); }
  std::span<const Polynomial> generators() const noexcept { return generators_; }

 private:
  std::size_t nvars_;
  std::vector<Polynomial> generators_;
};

struct GroebnerOptions {
  /// Bound on reduction steps (each subtraction of a multiple of a basis
  /// element counts once).  Exceeding it raises CapacityError.
  std::uint64_t max_steps = 5'000'000;
};

/// Reduced Groebner basis (monic, interreduced, sorted by descending
/// leading monomial).
Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                     const GroebnerOptions& options = {});

/// Leading term of f under the given order.
const Term& leading_term(const Polynomial& f, const MonomialOrder& order);

/// Remainder of f on division by an interreduced basis.  InputError if the
/// basis is not interreduced.
Polynomial normal_form(const Polynomial& f, const Ideal& basis,
                       const MonomialOrder& order);

/// Generators of the kernel of k[y_1..y_m] -> k[x_1..x_n], y_i -> images[i],
/// obtained by eliminating x from (y_i - images[i]).  The result is the
/// reduced grevlex basis of the kernel in m variables.
Ideal map_kernel(std::span<const Polynomial> images,
                 const GroebnerOptions& options = {});

/// Q with (Q) = ideal, scaled so the grevlex leading coefficient is 1.
/// InputError for the zero ideal or a non-principal ideal.
Polynomial principal_generator(const Ideal& ideal,
                               const GroebnerOptions& options = {});

struct Annihilator {
  bool exists = false;
  /// Coefficients in the fresh variables z_1..z_r standing for h_1..h_r.
  UPoly polynomial;
  std::uint32_t degree = 0;
};

/// Generator of the kernel of k[z_1..z_r][y] -> k[x] sending z_i -> h_i and
/// y -> s, for algebraically independent h.  exists = false when s is
/// transcendental over k(h).
Annihilator min_annihilating(std::span<const Polynomial> hs,
                             const Polynomial& s,
                             const GroebnerOptions& options = {});

/// Membership in the subalgebra k[h_1..h_m] of k[x_1..x_n].
class SubalgebraMembership {
 public:
  explicit SubalgebraMembership(std::span<const Polynomial> generators,
                                const GroebnerOptions& options = {});

  bool contains(const Polynomial& p) const;
  /// P in m variables with P(h_1..h_m) = p, or nullopt if p is not in the
  /// subalgebra.
  std::optional<Polynomial> express(const Polynomial& p) const;

 private:
  std::size_t n_;
  std::size_t m_;
  Ideal basis_;
};

}  // namespace wdeg
