#include "wdeg/forms.hpp"

#include <bit>

#include "wdeg/errors.hpp"

namespace wdeg {

DiffForm::DiffForm(std::size_t n, std::size_t grade) : n_(n), grade_(grade) {
  if (grade > n) {
    throw InputError("form grade " + std::to_string(grade) +
                     " exceeds the variable count " + std::to_string(n));
  }
  if (n > 31) throw InputError("too many variables for a differential form");
}

DiffForm DiffForm::scalar(const Polynomial& f) {
  DiffForm out(f.nvars(), 0);
  out.add_term(0, f);
  return out;
}

DiffForm DiffForm::basis(std::size_t n, std::span<const std::size_t> indices) {
  DiffForm out(n, indices.size());
  IndexSet mask = 0;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= n) throw InputError("dx index out of range");
    if (k && indices[k] <= indices[k - 1]) {
      throw InputError("dx indices must be strictly increasing");
    }
    mask |= IndexSet{1} << indices[k];
  }
  out.add_term(mask, Polynomial::constant(n, 1));
  return out;
}

Polynomial DiffForm::coefficient(IndexSet mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Polynomial(n_) : it->second;
}

Polynomial DiffForm::coefficient(std::span<const std::size_t> indices) const {
  IndexSet mask = 0;
  for (std::size_t i : indices) mask |= IndexSet{1} << i;
  return coefficient(mask);
}

void DiffForm::add_term(IndexSet mask, const Polynomial& f) {
  if (static_cast<std::size_t>(std::popcount(mask)) != grade_) {
    throw InputError("index tuple length does not match the form grade");
  }
  if (f.nvars() != n_) throw InputError("coefficient in the wrong ring");
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mask, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DiffForm::require_compatible(const DiffForm& other) const {
  if (n_ != other.n_ || grade_ != other.grade_) {
    throw InputError("adding forms of different rings or grades");
  }
}

DiffForm DiffForm::operator+(const DiffForm& other) const {
  require_compatible(other);
  DiffForm out = *this;
  for (const auto& [mask, f] : other.terms_) out.add_term(mask, f);
  return out;
}

DiffForm DiffForm::operator-(const DiffForm& other) const {
  require_compatible(other);
  DiffForm out = *this;
  for (const auto& [mask, f] : other.terms_) out.add_term(mask, -f);
  return out;
}

DiffForm DiffForm::operator*(const Polynomial& f) const {
  DiffForm out(n_, grade_);
  for (const auto& [mask, g] : terms_) out.add_term(mask, g * f);
  return out;
}

std::vector<std::size_t> mask_indices(DiffForm::IndexSet mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

DiffForm differential(const Polynomial& f) {
  DiffForm out(f.nvars(), 1);
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    out.add_term(DiffForm::IndexSet{1} << i, partial_derivative(f, i));
  }
  return out;
}

namespace {

// Sign of moving dx_T past dx_S into increasing order: (-1)^(number of
// pairs s in S, t in T with s > t).
int wedge_sign(DiffForm::IndexSet s, DiffForm::IndexSet t) {
  int inversions = 0;
  while (t) {
    const int j = std::countr_zero(t);
    t &= t - 1;
    const DiffForm::IndexSet above =
        j >= 31 ? 0 : s & ~((DiffForm::IndexSet{1} << (j + 1)) - 1);
    inversions += std::popcount(above);
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (a.nvars() != b.nvars()) throw InputError("wedge across rings");
  if (a.grade() + b.grade() > a.nvars()) {
    throw InputError("wedge of grades " + std::to_string(a.grade()) + " and " +
                     std::to_string(b.grade()) + " exceeds n = " +
                     std::to_string(a.nvars()));
  }
  DiffForm out(a.nvars(), a.grade() + b.grade());
  for (const auto& [s, f] : a.terms()) {
    for (const auto& [t, g] : b.terms()) {
      if (s & t) continue;
      Polynomial c = f * g;
      if (wedge_sign(s, t) < 0) c = -c;
      out.add_term(s | t, c);
    }
  }
  return out;
}

DiffForm wedge_all(std::span<const DiffForm> forms, std::size_t n) {
  DiffForm acc = DiffForm::scalar(Polynomial::constant(n, 1));
  for (const DiffForm& f : forms) acc = wedge(acc, f);
  return acc;
}

Degree form_degree(const DiffForm& omega, const WeightVector& w) {
  if (omega.nvars() != w.size()) {
    throw InputError("weight vector length does not match the form's ring");
  }
  Degree best = Degree::minus_infinity(w.levels());
  for (const auto& [mask, f] : omega.terms()) {
    Degree d = weighted_degree(f, w);
    for (std::size_t i : mask_indices(mask)) d = d + Degree(w[i]);
    best = max(best, d);
  }
  return best;
}

bool algebraically_independent(std::span<const Polynomial> hs) {
  if (hs.empty()) return true;
  const std::size_t n = hs[0].nvars();
  if (hs.size() > n) return false;
  DiffForm acc = DiffForm::scalar(Polynomial::constant(n, 1));
  for (const Polynomial& h : hs) {
    if (h.nvars() != n) throw InputError("polynomials from different rings");
    acc = wedge(acc, differential(h));
    if (acc.is_zero()) return false;
  }
  return true;
}

TwoMaxResult two_max_check(std::span<const DiffForm> etas,
                           const WeightVector& w) {
  const std::size_t l = etas.size();
  if (l < 2) throw InputError("need at least two forms");
  const std::size_t n = etas[0].nvars();
  if (l - 1 > n) {
    throw InputError("l - 1 = " + std::to_string(l - 1) +
                     " exceeds the variable count " + std::to_string(n));
  }
  for (const DiffForm& e : etas) {
    if (e.grade() != 1 || e.nvars() != n) {
      throw InputError("two-max check takes grade-1 forms in one ring");
    }
  }
  // prefix[i] = eta_1 ^ ... ^ eta_i, suffix[i] = eta_{i+1} ^ ... ^ eta_l.
  std::vector<DiffForm> prefix{DiffForm::scalar(Polynomial::constant(n, 1))};
  for (std::size_t i = 0; i + 1 < l; ++i) {
    prefix.push_back(wedge(prefix.back(), etas[i]));
  }
  std::vector<DiffForm> suffix(l + 1, DiffForm::scalar(Polynomial::constant(n, 1)));
  for (std::size_t i = l - 1; i >= 1; --i) {
    suffix[i] = wedge(etas[i], suffix[i + 1]);
  }

  TwoMaxResult out;
  for (std::size_t i = 0; i < l; ++i) {
    const DiffForm others = wedge(prefix[i], suffix[i + 1]);
    out.values.push_back(form_degree(etas[i], w) + form_degree(others, w));
  }
  Degree top = out.values[0];
  for (const Degree& d : out.values) top = max(top, d);
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < l; ++i) {
    if (out.values[i] == top) hits.push_back(i);
  }
  out.holds = hits.size() >= 2;
  out.first = hits[0];
  out.second = hits.size() >= 2 ? hits[1] : hits[0];
  return out;
}

}  // namespace wdeg
