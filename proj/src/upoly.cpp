#include "wdeg/upoly.hpp"

#include "wdeg/errors.hpp"

namespace wdeg {

UPoly::UPoly(std::size_t n, std::vector<Polynomial> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  for (const Polynomial& c : coeffs_) {
    if (c.nvars() != n_) throw InputError("UPoly coefficient in the wrong ring");
  }
  trim();
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::size_t y_index) {
  if (p.nvars() == 0 || y_index >= p.nvars()) {
    throw InputError("y variable index out of range");
  }
  const std::size_t n = p.nvars() - 1;
  std::vector<std::vector<Term>> buckets;
  for (const Term& t : p.terms()) {
    const std::uint32_t e = t.mono[y_index];
    if (buckets.size() <= e) buckets.resize(e + 1);
    Monomial m(n);
    for (std::size_t i = 0, j = 0; i < p.nvars(); ++i) {
      if (i == y_index) continue;
      m[j++] = t.mono[i];
    }
    buckets[e].push_back({m, t.coef});
  }
  std::vector<Polynomial> coeffs;
  coeffs.reserve(buckets.size());
  for (auto& b : buckets) coeffs.emplace_back(n, std::move(b));
  return UPoly(n, std::move(coeffs));
}

UPoly UPoly::y(std::size_t n) {
  return UPoly(n, {Polynomial(n), Polynomial::constant(n, 1)});
}

Polynomial UPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Polynomial(n_);
}

Polynomial UPoly::to_polynomial() const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (const Term& t : coeffs_[i].terms()) {
      Monomial m(n_ + 1);
      for (std::size_t j = 0; j < n_; ++j) m[j] = t.mono[j];
      m[n_] = static_cast<std::uint32_t>(i);
      terms.push_back({m, t.coef});
    }
  }
  return Polynomial(n_ + 1, std::move(terms));
}

UPoly UPoly::derivative(std::uint32_t order) const {
  if (order == 0) return *this;
  std::vector<Polynomial> out;
  for (std::size_t i = order; i < coeffs_.size(); ++i) {
    // d^order/dy^order y^i = i (i-1) ... (i-order+1) y^(i-order)
    Integer falling = 1;
    for (std::size_t k = 0; k < order; ++k) falling *= static_cast<unsigned long>(i - k);
    out.push_back(coeffs_[i] * Rational(falling));
  }
  return UPoly(n_, std::move(out));
}

UPoly UPoly::operator+(const UPoly& other) const {
  if (n_ != other.n_) throw InputError("UPoly sum across rings");
  std::vector<Polynomial> out(std::max(coeffs_.size(), other.coeffs_.size()),
                              Polynomial(n_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return UPoly(n_, std::move(out));
}

UPoly UPoly::operator*(const UPoly& other) const {
  if (n_ != other.n_) throw InputError("UPoly product across rings");
  if (is_zero() || other.is_zero()) return UPoly(n_);
  std::vector<Polynomial> out(coeffs_.size() + other.coeffs_.size() - 1,
                              Polynomial(n_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return UPoly(n_, std::move(out));
}

std::string UPoly::str() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n_; ++i) names.push_back("x" + std::to_string(i + 1));
  names.push_back("y");
  return str(names);
}

std::string UPoly::str(std::span<const std::string> names) const {
  if (names.size() != n_ + 1) throw InputError("UPoly printing needs n + 1 names");
  return to_polynomial().str(names);
}

Polynomial apply(const UPoly& phi, const Polynomial& g) {
  if (g.nvars() != phi.nvars()) throw InputError("Phi(g) across rings");
  Polynomial acc(phi.nvars());
  const auto coeffs = phi.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * g + coeffs[i];
  }
  return acc;
}

UPoly substitute_coefficients(const UPoly& phi,
                              std::span<const Polynomial> images) {
  if (images.size() != phi.nvars()) {
    throw InputError("coefficient substitution needs " +
                     std::to_string(phi.nvars()) + " images");
  }
  const std::size_t m = images.empty() ? 0 : images[0].nvars();
  std::vector<Polynomial> out;
  for (const Polynomial& c : phi.coefficients()) {
    out.push_back(substitute_vars(c, images));
  }
  return UPoly(m, std::move(out));
}

Degree deg_wg(const UPoly& phi, const Polynomial& g, const WeightVector& w) {
  if (g.nvars() != phi.nvars()) throw InputError("deg_w^g across rings");
  const Degree dg = weighted_degree(g, w);
  Degree best = Degree::minus_infinity(w.levels());
  const auto coeffs = phi.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    best = max(best, weighted_degree(coeffs[i], w) +
                         dg.scaled(static_cast<std::int64_t>(i)));
  }
  return best;
}

UPoly initial_wg(const UPoly& phi, const Polynomial& g, const WeightVector& w) {
  if (phi.is_zero()) throw InputError("initial form of Phi = 0 is undefined");
  if (g.is_zero()) throw InputError("initial form Phi^{w,g} needs g != 0");
  const Degree top = deg_wg(phi, g, w);
  const Degree dg = weighted_degree(g, w);
  std::vector<Polynomial> out;
  const auto coeffs = phi.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero() &&
        weighted_degree(coeffs[i], w) + dg.scaled(static_cast<std::int64_t>(i)) ==
            top) {
      out.push_back(initial_form(coeffs[i], w));
    } else {
      out.emplace_back(phi.nvars());
    }
  }
  return UPoly(phi.nvars(), std::move(out));
}

namespace {

void require_nonzero(const UPoly& phi, const Polynomial& g) {
  if (phi.is_zero()) throw InputError("m_w^g needs Phi != 0");
  if (g.is_zero()) throw InputError("m_w^g needs g != 0");
}

std::uint32_t m_by_definition(const UPoly& phi, const Polynomial& g,
                              const WeightVector& w) {
  UPoly d = phi;
  for (std::uint32_t i = 0;; ++i) {
    if (deg_wg(d, g, w) == weighted_degree(apply(d, g), w)) return i;
    d = d.derivative();
    if (d.is_zero()) {
      throw InternalError("no derivative order attains the substitution degree");
    }
  }
}

std::uint32_t m_by_initial(const UPoly& phi, const Polynomial& g,
                           const WeightVector& w) {
  UPoly d = initial_wg(phi, g, w);
  const Polynomial gw = initial_form(g, w);
  for (std::uint32_t i = 0;; ++i) {
    if (!apply(d, gw).is_zero()) return i;
    d = d.derivative();
    if (d.is_zero()) {
      throw InternalError("initial form vanishes to every derivative order");
    }
  }
}

}  // namespace

std::uint32_t m_wg(const UPoly& phi, const Polynomial& g, const WeightVector& w,
                   MMethod method) {
  require_nonzero(phi, g);
  switch (method) {
    case MMethod::kByDefinition:
      return m_by_definition(phi, g, w);
    case MMethod::kByInitial:
      return m_by_initial(phi, g, w);
    case MMethod::kCrossCheck: {
      const std::uint32_t a = m_by_definition(phi, g, w);
      const std::uint32_t b = m_by_initial(phi, g, w);
      if (a != b) {
        throw InternalError("m_w^g mismatch: by definition " +
                            std::to_string(a) + ", by initial form " +
                            std::to_string(b));
      }
      return a;
    }
  }
  throw InputError("unknown m_w^g method");
}

CancellationConditions cancellation_conditions(const UPoly& phi,
                                               const Polynomial& g,
                                               const WeightVector& w) {
  require_nonzero(phi, g);
  CancellationConditions out;
  out.depth_zero = m_wg(phi, g, w, MMethod::kByDefinition) == 0;

  const Polynomial value = apply(phi, g);
  out.degree_preserved = deg_wg(phi, g, w) == weighted_degree(value, w);

  const Polynomial initial_value =
      apply(initial_wg(phi, g, w), initial_form(g, w));
  out.initial_nonzero = !initial_value.is_zero();

  out.initial_matches =
      !value.is_zero() && initial_form(value, w) == initial_value;

  out.all_equivalent = out.depth_zero == out.degree_preserved &&
                       out.degree_preserved == out.initial_nonzero &&
                       out.initial_nonzero == out.initial_matches;
  return out;
}

}  // namespace wdeg
