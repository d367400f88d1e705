#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace wdeg {

/// An element of the grading group Z^k, ordered lexicographically.
///
/// k (the number of levels) is fixed per computation; mixing elements with
/// different level counts raises InputError.  k = 1 is the ordinary integer
/// grading.
class Gamma {
 public:
  static constexpr std::size_t kMaxLevels = 4;

  Gamma() : levels_(1) {}
  explicit Gamma(std::int64_t value) : levels_(1) { values_[0] = value; }
  explicit Gamma(std::span<const std::int64_t> values);
  Gamma(std::initializer_list<std::int64_t> values)
      : Gamma(std::span<const std::int64_t>(values.begin(), values.size())) {}

  static Gamma zero(std::size_t levels);

  std::size_t levels() const noexcept { return levels_; }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  std::span<const std::int64_t> values() const noexcept {
    return {values_.data(), levels_};
  }

  bool is_zero() const noexcept;
  /// True iff the element is >= 0 in the lexicographic order.
  bool is_nonnegative() const noexcept;
  bool is_positive() const noexcept { return is_nonnegative() && !is_zero(); }

  Gamma operator+(const Gamma& other) const;
  Gamma operator-(const Gamma& other) const;
  Gamma operator-() const;
  Gamma& operator+=(const Gamma& other);
  Gamma scaled(std::int64_t factor) const;

  std::strong_ordering operator<=>(const Gamma& other) const;
  bool operator==(const Gamma& other) const;

  std::string str() const;

 private:
  void require_compatible(const Gamma& other) const;

  std::array<std::int64_t, kMaxLevels> values_{};
  std::size_t levels_;
};

/// Gamma extended by a least element -infinity (the degree of zero).
///
/// -infinity absorbs addition, and the sum of zero copies of anything is the
/// group zero, so scaled(0) of -infinity is 0.
class Degree {
 public:
  Degree() : finite_(false) {}
  Degree(Gamma value) : value_(value), finite_(true) {}  // NOLINT: implicit
  explicit Degree(std::int64_t value) : Degree(Gamma(value)) {}

  static Degree minus_infinity(std::size_t levels = 1);

  bool is_finite() const noexcept { return finite_; }
  bool is_minus_infinity() const noexcept { return !finite_; }
  std::size_t levels() const noexcept { return value_.levels(); }

  /// The finite value; InputError on -infinity.
  const Gamma& value() const;

  Degree operator+(const Degree& other) const;
  /// Subtraction of a finite degree.  Subtracting -infinity is undefined and
  /// raises InputError; -infinity minus anything finite stays -infinity.
  Degree operator-(const Degree& other) const;
  /// Sum of `copies` copies of this degree.
  Degree scaled(std::int64_t copies) const;

  std::strong_ordering operator<=>(const Degree& other) const;
  bool operator==(const Degree& other) const;

  std::string str() const;

 private:
  Gamma value_;
  bool finite_;
};

Degree max(const Degree& a, const Degree& b);

/// The weights (w_1, ..., w_n), one Gamma per variable, all with the same
/// number of levels.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Gamma> weights);
  WeightVector(std::initializer_list<std::int64_t> weights);
  static WeightVector from_integers(std::span<const std::int64_t> weights);
  static WeightVector uniform(std::size_t n, std::int64_t weight = 1);

  std::size_t size() const noexcept { return weights_.size(); }
  std::size_t levels() const noexcept { return levels_; }
  const Gamma& operator[](std::size_t i) const { return weights_[i]; }
  std::span<const Gamma> weights() const noexcept { return weights_; }

  bool all_nonnegative() const noexcept;
  /// True when the grading group is Z.
  bool is_integer() const noexcept { return levels_ == 1; }
  Gamma sum() const;
  Gamma max() const;
  Gamma min() const;

  bool operator==(const WeightVector& other) const = default;
  std::string str() const;

 private:
  std::vector<Gamma> weights_;
  std::size_t levels_ = 1;
};

}  // namespace wdeg
