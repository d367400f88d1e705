#include "wdeg/gamma.hpp"

#include <algorithm>

#include "wdeg/errors.hpp"

namespace wdeg {

Gamma::Gamma(std::span<const std::int64_t> values) : levels_(values.size()) {
  if (values.empty() || values.size() > kMaxLevels) {
    throw InputError("grading group element must have between 1 and " +
                     std::to_string(kMaxLevels) + " levels");
  }
  std::copy(values.begin(), values.end(), values_.begin());
}

Gamma Gamma::zero(std::size_t levels) {
  std::array<std::int64_t, kMaxLevels> zeros{};
  return Gamma(std::span<const std::int64_t>(zeros.data(), levels));
}

bool Gamma::is_zero() const noexcept {
  for (std::size_t i = 0; i < levels_; ++i) {
    if (values_[i] != 0) return false;
  }
  return true;
}

bool Gamma::is_nonnegative() const noexcept {
  for (std::size_t i = 0; i < levels_; ++i) {
    if (values_[i] != 0) return values_[i] > 0;
  }
  return true;
}

void Gamma::require_compatible(const Gamma& other) const {
  if (levels_ != other.levels_) {
    throw InputError("grading group elements with different level counts (" +
                     std::to_string(levels_) + " vs " +
                     std::to_string(other.levels_) + ")");
  }
}

Gamma Gamma::operator+(const Gamma& other) const {
  Gamma out = *this;
  out += other;
  return out;
}

Gamma& Gamma::operator+=(const Gamma& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < levels_; ++i) values_[i] += other.values_[i];
  return *this;
}

Gamma Gamma::operator-(const Gamma& other) const { return *this + (-other); }

Gamma Gamma::operator-() const {
  Gamma out = *this;
  for (std::size_t i = 0; i < levels_; ++i) out.values_[i] = -values_[i];
  return out;
}

Gamma Gamma::scaled(std::int64_t factor) const {
  Gamma out = *this;
  for (std::size_t i = 0; i < levels_; ++i) out.values_[i] *= factor;
  return out;
}

std::strong_ordering Gamma::operator<=>(const Gamma& other) const {
  require_compatible(other);
  for (std::size_t i = 0; i < levels_; ++i) {
    if (values_[i] != other.values_[i]) return values_[i] <=> other.values_[i];
  }
  return std::strong_ordering::equal;
}

bool Gamma::operator==(const Gamma& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::string Gamma::str() const {
  if (levels_ == 1) return std::to_string(values_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < levels_; ++i) {
    if (i) out += ",";
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

Degree Degree::minus_infinity(std::size_t levels) {
  Degree d;
  d.value_ = Gamma::zero(levels);
  return d;
}

const Gamma& Degree::value() const {
  if (!finite_) throw InputError("-infinity has no finite value");
  return value_;
}

Degree Degree::operator+(const Degree& other) const {
  if (!finite_ || !other.finite_) return minus_infinity(levels());
  return Degree(value_ + other.value_);
}

Degree Degree::operator-(const Degree& other) const {
  if (!other.finite_) throw InputError("cannot subtract -infinity");
  if (!finite_) return *this;
  return Degree(value_ - other.value_);
}

Degree Degree::scaled(std::int64_t copies) const {
  if (copies < 0) throw InputError("degree scaled by a negative count");
  if (copies == 0) return Degree(Gamma::zero(levels()));
  if (!finite_) return *this;
  return Degree(value_.scaled(copies));
}

std::strong_ordering Degree::operator<=>(const Degree& other) const {
  if (!finite_ && !other.finite_) return std::strong_ordering::equal;
  if (!finite_) return std::strong_ordering::less;
  if (!other.finite_) return std::strong_ordering::greater;
  return value_ <=> other.value_;
}

bool Degree::operator==(const Degree& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::string Degree::str() const { return finite_ ? value_.str() : "-inf"; }

Degree max(const Degree& a, const Degree& b) { return a < b ? b : a; }

WeightVector::WeightVector(std::vector<Gamma> weights)
    : weights_(std::move(weights)) {
  levels_ = weights_.empty() ? 1 : weights_.front().levels();
  for (const Gamma& g : weights_) {
    if (g.levels() != levels_) {
      throw InputError("weight vector entries have different level counts");
    }
  }
}

WeightVector::WeightVector(std::initializer_list<std::int64_t> weights) {
  for (std::int64_t v : weights) weights_.emplace_back(v);
}

WeightVector WeightVector::from_integers(std::span<const std::int64_t> weights) {
  std::vector<Gamma> out;
  out.reserve(weights.size());
  for (std::int64_t v : weights) out.emplace_back(v);
  return WeightVector(std::move(out));
}

WeightVector WeightVector::uniform(std::size_t n, std::int64_t weight) {
  return WeightVector(std::vector<Gamma>(n, Gamma(weight)));
}

bool WeightVector::all_nonnegative() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Gamma& g) { return g.is_nonnegative(); });
}

Gamma WeightVector::sum() const {
  Gamma total = Gamma::zero(levels_);
  for (const Gamma& g : weights_) total += g;
  return total;
}

Gamma WeightVector::max() const {
  if (weights_.empty()) throw InputError("max of an empty weight vector");
  return *std::max_element(weights_.begin(), weights_.end());
}

Gamma WeightVector::min() const {
  if (weights_.empty()) throw InputError("min of an empty weight vector");
  return *std::min_element(weights_.begin(), weights_.end());
}

std::string WeightVector::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ", ";
    out += weights_[i].str();
  }
  return out + "]";
}

}  // namespace wdeg
