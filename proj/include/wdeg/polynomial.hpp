#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wdeg/gamma.hpp"
#include "wdeg/rational.hpp"

namespace wdeg {

/// Exponent vector x_1^{a_1} ... x_n^{a_n}.  Stored inline; n is bounded by
/// kMaxVars, which comfortably covers the elimination rings used here
/// (source plus target variables).
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;

  Monomial() = default;
  explicit Monomial(std::size_t n);
  Monomial(std::initializer_list<std::uint32_t> exponents);
  explicit Monomial(std::span<const std::uint32_t> exponents);

  static Monomial variable(std::size_t n, std::size_t index,
                           std::uint32_t power = 1);

  std::size_t size() const noexcept { return size_; }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exp_[i]; }
  std::span<const std::uint32_t> exponents() const noexcept {
    return {exp_.data(), size_};
  }

  std::uint64_t total_degree() const noexcept;
  bool is_one() const noexcept;

  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  bool operator==(const Monomial& other) const noexcept;

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint32_t, kMaxVars> exp_{};
  std::size_t size_ = 0;
};

/// Graded lexicographic comparison; the canonical storage order of
/// Polynomial (largest first).
int compare_grlex(const Monomial& a, const Monomial& b) noexcept;

struct Term {
  Monomial mono;
  Rational coef;

  bool operator==(const Term& other) const = default;
};

/// Sparse polynomial in n variables over the rationals.
///
/// Terms are kept sorted by descending graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
/// Variable indices are zero-based (x1 is index 0).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}
  /// Normalizes: combines like terms, drops zeros, sorts.
  Polynomial(std::size_t n, std::vector<Term> terms);

  static Polynomial constant(std::size_t n, const Rational& c);
  static Polynomial variable(std::size_t n, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c);

  std::size_t nvars() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  /// Coefficient of the given monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;
  /// Constant term.
  Rational constant_term() const;
  /// Largest term under graded-lex.  Requires a nonzero polynomial.
  const Term& leading_term() const;

  /// Total degree; -1 for the zero polynomial.
  std::int64_t total_degree() const noexcept;
  /// Largest exponent of the given variable; 0 for the zero polynomial.
  std::uint32_t degree_in(std::size_t index) const;
  bool involves(std::size_t index) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial pow(std::uint32_t e) const;

  /// Divides every coefficient by c (c != 0).
  Polynomial divided_by(const Rational& c) const;
  /// Scales so that the leading (graded-lex) coefficient is 1.
  Polynomial monic() const;

  bool operator==(const Polynomial& other) const = default;

  /// Text using variable names x1..xn, e.g. "x1*x3 + x2^2".
  std::string str() const;
  std::string str(std::span<const std::string> names) const;

 private:
  void require_same_ring(const Polynomial& other) const;

  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

/// Collects terms in any order and produces a normalized polynomial.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(std::size_t n) : n_(n) {}
  void add(const Monomial& m, const Rational& c);
  void add(Monomial&& m, Rational&& c);
  void add_product(const Polynomial& a, const Polynomial& b);
  void add_scaled(const Polynomial& p, const Rational& c, const Monomial& m);
  Polynomial build() &&;

 private:
  std::size_t n_;
  std::vector<Term> terms_;
};

/// w-weight of a single monomial: sum of a_i * w_i.
Gamma monomial_weight(const Monomial& m, const WeightVector& w);

/// The w-degree: maximal monomial weight; -infinity for zero.
Degree weighted_degree(const Polynomial& f, const WeightVector& w);

/// The top w-homogeneous component.  InputError for f = 0.
Polynomial initial_form(const Polynomial& f, const WeightVector& w);

/// Decomposition into w-homogeneous components keyed by their degree.
std::map<Gamma, Polynomial> homogeneous_components(const Polynomial& f,
                                                   const WeightVector& w);

/// True iff all terms share one w-weight (zero counts as homogeneous).
bool is_homogeneous(const Polynomial& f, const WeightVector& w);

/// d f / d x_index.
Polynomial partial_derivative(const Polynomial& f, std::size_t index);

/// Replaces x_i by images[i].  All images must live in one common ring,
/// which becomes the ring of the result.
Polynomial substitute_vars(const Polynomial& f,
                           std::span<const Polynomial> images);

/// Re-homes f into an m-variable ring, sending x_i to x_{target[i]}.
Polynomial rename_vars(const Polynomial& f, std::size_t m,
                       std::span<const std::size_t> target);

/// Exact quotient a / b in k[x] if b divides a, otherwise nullopt.
std::optional<Polynomial> exact_quotient(const Polynomial& a,
                                         const Polynomial& b);

}  // namespace wdeg

template <>
struct std::hash<wdeg::Monomial> {
  std::size_t operator()(const wdeg::Monomial& m) const noexcept {
    return m.hash();
  }
};
