#include "wdeg/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "wdeg/errors.hpp"

namespace wdeg {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 ||
      q.get_den() == 0) {
    throw InputError("malformed rational number '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t n) : size_(n) {
  if (n > kMaxVars) {
    throw InputError("at most " + std::to_string(kMaxVars) +
                     " variables are supported");
  }
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(std::span<const std::uint32_t>(exponents.begin(),
                                              exponents.size())) {}

Monomial::Monomial(std::span<const std::uint32_t> exponents)
    : Monomial(exponents.size()) {
  std::copy(exponents.begin(), exponents.end(), exp_.begin());
}

Monomial Monomial::variable(std::size_t n, std::size_t index,
                            std::uint32_t power) {
  if (index >= n) throw InputError("variable index out of range");
  Monomial m(n);
  m.exp_[index] = power;
  return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < size_; ++i) d += exp_[i];
  return d;
}

bool Monomial::is_one() const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < size_; ++i) out.exp_[i] += other.exp_[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < size_; ++i) out.exp_[i] -= other.exp_[i];
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < size_; ++i) {
    out.exp_[i] = std::max(exp_[i], other.exp_[i]);
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] && other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::operator==(const Monomial& other) const noexcept {
  if (size_ != other.size_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exp_[i] != other.exp_[i]) return false;
  }
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= exp_[i] + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

int compare_grlex(const Monomial& a, const Monomial& b) noexcept {
  const std::uint64_t da = a.total_degree();
  const std::uint64_t db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool grlex_greater(const Term& a, const Term& b) {
  return compare_grlex(a.mono, b.mono) > 0;
}

// Sorts descending, merges equal monomials and drops zeros.
void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), grlex_greater);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = std::move(terms[i].coef);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      c += terms[j].coef;
      ++j;
    }
    if (c != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// a + sign * b for two sorted term lists.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b,
                              bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = compare_grlex(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? Rational(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].coef - b[j].coef)
                            : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back({b[j].mono, subtract ? Rational(-b[j].coef) : b[j].coef});
  }
  return out;
}

}  // namespace

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::size_t n, std::vector<Term> terms)
    : n_(n), terms_(std::move(terms)) {
  for (const Term& t : terms_) {
    if (t.mono.size() != n_) {
      throw InputError("monomial length does not match variable count");
    }
  }
  normalize_terms(terms_);
}

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  if (c != 0) p.terms_.push_back({Monomial(n), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t index) {
  Polynomial p(n);
  p.terms_.push_back({Monomial::variable(n, index), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
        return compare_grlex(t.mono, key) > 0;
      });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return Rational(0);
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return Rational(0);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading term");
  return terms_.front();
}

std::int64_t Polynomial::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<std::int64_t>(terms_.front().mono.total_degree());
}

std::uint32_t Polynomial::degree_in(std::size_t index) const {
  if (index >= n_) throw InputError("variable index out of range");
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono[index]);
  return d;
}

bool Polynomial::involves(std::size_t index) const {
  return degree_in(index) > 0;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (n_ != other.n_) {
    throw InputError("polynomials live in rings with different variable "
                     "counts (" + std::to_string(n_) + " vs " +
                     std::to_string(other.n_) + ")");
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(other);
  Polynomial out(n_);
  out.terms_ = merge_terms(terms_, other.terms_, false);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(other);
  Polynomial out(n_);
  out.terms_ = merge_terms(terms_, other.terms_, true);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coef = -t.coef;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(other);
  if (is_zero() || other.is_zero()) return Polynomial(n_);
  if (other.terms_.size() == 1) {
    // Monomial multiplication preserves the order.
    Polynomial out(n_);
    out.terms_.reserve(terms_.size());
    const Term& s = other.terms_[0];
    for (const Term& t : terms_) {
      out.terms_.push_back({t.mono * s.mono, t.coef * s.coef});
    }
    return out;
  }
  if (terms_.size() == 1) return other * *this;
  PolynomialBuilder b(n_);
  b.add_product(*this, other);
  return std::move(b).build();
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(n_);
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coef *= c;
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  return *this = *this + other;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  return *this = *this - other;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  return *this = *this * other;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(n_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::divided_by(const Rational& c) const {
  if (c == 0) throw InputError("division by zero");
  Polynomial out = *this;
  for (Term& t : out.terms_) t.coef /= c;
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return divided_by(terms_.front().coef);
}

std::string Polynomial::str() const {
  std::vector<std::string> names;
  names.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) names.push_back("x" + std::to_string(i + 1));
  return str(names);
}

std::string Polynomial::str(std::span<const std::string> names) const {
  if (names.size() < n_) throw InputError("not enough variable names");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = t.coef < 0;
    Rational mag = abs(t.coef);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!t.mono[i]) continue;
      if (!factors.empty()) factors += "*";
      factors += names[i];
      if (t.mono[i] > 1) factors += "^" + std::to_string(t.mono[i]);
    }
    if (factors.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += to_string(mag) + "*" + factors;
    }
  }
  return out;
}

// ------------------------------------------------------- PolynomialBuilder

void PolynomialBuilder::add(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.push_back({m, c});
}

void PolynomialBuilder::add(Monomial&& m, Rational&& c) {
  if (c != 0) terms_.push_back({std::move(m), std::move(c)});
}

void PolynomialBuilder::add_product(const Polynomial& a, const Polynomial& b) {
  terms_.reserve(terms_.size() + a.size() * b.size());
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) {
      terms_.push_back({s.mono * t.mono, s.coef * t.coef});
    }
  }
}

void PolynomialBuilder::add_scaled(const Polynomial& p, const Rational& c,
                                   const Monomial& m) {
  if (c == 0) return;
  for (const Term& t : p.terms()) terms_.push_back({t.mono * m, t.coef * c});
}

Polynomial PolynomialBuilder::build() && {
  return Polynomial(n_, std::move(terms_));
}

// ------------------------------------------------------ weighted grading

namespace {

void require_weights(const Polynomial& f, const WeightVector& w) {
  if (f.nvars() != w.size()) {
    throw InputError("weight vector has " + std::to_string(w.size()) +
                     " entries but the polynomial has " +
                     std::to_string(f.nvars()) + " variables");
  }
}

}  // namespace

Gamma monomial_weight(const Monomial& m, const WeightVector& w) {
  Gamma total = Gamma::zero(w.levels());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) total += w[i].scaled(m[i]);
  }
  return total;
}

Degree weighted_degree(const Polynomial& f, const WeightVector& w) {
  require_weights(f, w);
  Degree best = Degree::minus_infinity(w.levels());
  for (const Term& t : f.terms()) {
    Degree d(monomial_weight(t.mono, w));
    if (best < d) best = d;
  }
  return best;
}

Polynomial initial_form(const Polynomial& f, const WeightVector& w) {
  require_weights(f, w);
  if (f.is_zero()) throw InputError("the initial form of 0 is undefined");
  const Gamma top = weighted_degree(f, w).value();
  std::vector<Term> kept;
  for (const Term& t : f.terms()) {
    if (monomial_weight(t.mono, w) == top) kept.push_back(t);
  }
  return Polynomial(f.nvars(), std::move(kept));
}

std::map<Gamma, Polynomial> homogeneous_components(const Polynomial& f,
                                                   const WeightVector& w) {
  require_weights(f, w);
  std::map<Gamma, std::vector<Term>> buckets;
  for (const Term& t : f.terms()) {
    buckets[monomial_weight(t.mono, w)].push_back(t);
  }
  std::map<Gamma, Polynomial> out;
  for (auto& [deg, terms] : buckets) {
    out.emplace(deg, Polynomial(f.nvars(), std::move(terms)));
  }
  return out;
}

bool is_homogeneous(const Polynomial& f, const WeightVector& w) {
  require_weights(f, w);
  if (f.is_zero()) return true;
  const Gamma first = monomial_weight(f.terms()[0].mono, w);
  for (const Term& t : f.terms()) {
    if (!(monomial_weight(t.mono, w) == first)) return false;
  }
  return true;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t index) {
  if (index >= f.nvars()) {
    throw InputError("derivative index " + std::to_string(index + 1) +
                     " out of range 1.." + std::to_string(f.nvars()));
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    if (!t.mono[index]) continue;
    Term d = t;
    d.coef *= t.mono[index];
    d.mono[index] -= 1;
    out.push_back(std::move(d));
  }
  return Polynomial(f.nvars(), std::move(out));
}

Polynomial substitute_vars(const Polynomial& f,
                           std::span<const Polynomial> images) {
  if (images.size() != f.nvars()) {
    throw InputError("substitution needs " + std::to_string(f.nvars()) +
                     " images, got " + std::to_string(images.size()));
  }
  const std::size_t m = images.empty() ? 0 : images[0].nvars();
  for (const Polynomial& g : images) {
    if (g.nvars() != m) {
      throw InputError("substitution images live in different rings");
    }
  }
  // powers[i][e] = images[i]^e, grown on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(Polynomial::constant(m, 1));
      cache.push_back(images[i]);
    }
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  PolynomialBuilder acc(m);
  for (const Term& t : f.terms()) {
    Polynomial prod = Polynomial::constant(m, t.coef);
    for (std::size_t i = 0; i < f.nvars() && !prod.is_zero(); ++i) {
      if (t.mono[i]) prod *= power(i, t.mono[i]);
    }
    for (const Term& s : prod.terms()) acc.add(s.mono, s.coef);
  }
  return std::move(acc).build();
}

Polynomial rename_vars(const Polynomial& f, std::size_t m,
                       std::span<const std::size_t> target) {
  if (target.size() != f.nvars()) {
    throw InputError("variable map length does not match variable count");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    Monomial mono(m);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (target[i] >= m) throw InputError("variable map target out of range");
      mono[target[i]] += t.mono[i];
    }
    out.push_back({mono, t.coef});
  }
  return Polynomial(m, std::move(out));
}

std::optional<Polynomial> exact_quotient(const Polynomial& a,
                                         const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw InputError("division across rings");
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  const std::size_t n = a.nvars();
  const Term& lead = b.leading_term();
  std::vector<Term> quotient;
  Polynomial rem = a;
  while (!rem.is_zero()) {
    const Term& top = rem.leading_term();
    // {b} is a Groebner basis of (b): an undividable leading term means b
    // does not divide a.
    if (!lead.mono.divides(top.mono)) return std::nullopt;
    Term q{top.mono / lead.mono, top.coef / lead.coef};
    rem -= b * Polynomial::monomial(q.mono, q.coef);
    quotient.push_back(std::move(q));
  }
  return Polynomial(n, std::move(quotient));
}

}  // namespace wdeg
