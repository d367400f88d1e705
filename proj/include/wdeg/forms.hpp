#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "wdeg/gamma.hpp"
#include "wdeg/polynomial.hpp"

namespace wdeg {

/// An element of the r-th exterior power of the module of differentials,
///   sum f_I dx_{i_1} ^ ... ^ dx_{i_r}   over strictly increasing I.
///
/// Index tuples are stored as bitmasks (bit i set = dx_{i+1} present); the
/// tuple is the set bits in increasing order.  Grade 0 forms are bare
/// polynomials stored under the empty mask.
class DiffForm {
 public:
  using IndexSet = std::uint32_t;

  DiffForm(std::size_t n, std::size_t grade);
  /// Grade-0 form.
  static DiffForm scalar(const Polynomial& f);
  /// dx_{i_1} ^ ... ^ dx_{i_r} with zero-based, strictly increasing indices.
  static DiffForm basis(std::size_t n, std::span<const std::size_t> indices);

  std::size_t nvars() const noexcept { return n_; }
  std::size_t grade() const noexcept { return grade_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<IndexSet, Polynomial>& terms() const noexcept { return terms_; }

  Polynomial coefficient(std::span<const std::size_t> indices) const;
  Polynomial coefficient(IndexSet mask) const;
  /// Adds f * dx_I.  Zero results are dropped.
  void add_term(IndexSet mask, const Polynomial& f);

  DiffForm operator+(const DiffForm& other) const;
  DiffForm operator-(const DiffForm& other) const;
  DiffForm operator*(const Polynomial& f) const;

  bool operator==(const DiffForm& other) const = default;

 private:
  void require_compatible(const DiffForm& other) const;

  std::size_t n_;
  std::size_t grade_;
  std::map<IndexSet, Polynomial> terms_;
};

/// Zero-based indices of a mask in increasing order.
std::vector<std::size_t> mask_indices(DiffForm::IndexSet mask);

/// df = sum (d f / d x_i) dx_i.
DiffForm differential(const Polynomial& f);

/// Alternating product.  InputError when the grades sum past n.
DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// a_1 ^ ... ^ a_k; the grade-0 unit for an empty list in n variables.
DiffForm wedge_all(std::span<const DiffForm> forms, std::size_t n);

/// max over terms of deg_w(f_I) + sum_{i in I} w_i; -infinity for zero.
Degree form_degree(const DiffForm& omega, const WeightVector& w);

/// True iff dh_1 ^ ... ^ dh_s != 0, which in characteristic zero is
/// algebraic independence.  More than n polynomials are always dependent.
bool algebraically_independent(std::span<const Polynomial> hs);

struct TwoMaxResult {
  /// values[i] = deg_w eta_i + deg_w (wedge of all eta_j, j != i).
  std::vector<Degree> values;
  /// The two smallest indices attaining the maximum (zero-based).
  std::size_t first = 0;
  std::size_t second = 0;
  /// True iff the maximum is attained at least twice.
  bool holds = false;
};

/// For grade-1 forms eta_1..eta_l (l >= 2, l - 1 <= n): the maximum of
/// deg eta_i + deg eta~_i is attained at two distinct indices.
TwoMaxResult two_max_check(std::span<const DiffForm> etas,
                           const WeightVector& w);

}  // namespace wdeg
