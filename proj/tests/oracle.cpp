#include "oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace oracle {

OPoly OPoly::constant(int n, const mpq_class& c) {
  OPoly p(n);
  if (c != 0) p.terms[Exponents(n, 0)] = c;
  return p;
}

OPoly OPoly::var(int n, int i) {
  OPoly p(n);
  Exponents e(n, 0);
  e[i] = 1;
  p.terms[e] = 1;
  return p;
}

OPoly OPoly::operator+(const OPoly& o) const {
  OPoly r = *this;
  for (const auto& [e, c] : o.terms) {
    mpq_class v = r.terms[e] + c;
    if (v == 0) {
      r.terms.erase(e);
    } else {
      r.terms[e] = v;
    }
  }
  return r;
}

OPoly OPoly::operator-(const OPoly& o) const { return *this + o.scaled(-1); }

OPoly OPoly::operator*(const OPoly& o) const {
  OPoly r(n);
  for (const auto& [e1, c1] : terms) {
    for (const auto& [e2, c2] : o.terms) {
      Exponents e(n);
      for (int i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
      mpq_class v = r.terms[e] + c1 * c2;
      if (v == 0) {
        r.terms.erase(e);
      } else {
        r.terms[e] = v;
      }
    }
  }
  return r;
}

OPoly OPoly::scaled(const mpq_class& c) const {
  OPoly r(n);
  if (c == 0) return r;
  for (const auto& [e, v] : terms) r.terms[e] = v * c;
  return r;
}

OPoly OPoly::pow(int e) const {
  OPoly r = constant(n, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

OPoly OPoly::diff(int i) const {
  OPoly r(n);
  for (const auto& [e, c] : terms) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    r.terms[d] = c * e[i];
  }
  return r;
}

mpq_class OPoly::eval(const std::vector<mpq_class>& point) const {
  mpq_class sum = 0;
  for (const auto& [e, c] : terms) {
    mpq_class t = c;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

OPoly OPoly::compose(const std::vector<OPoly>& images) const {
  const int m = images.empty() ? 0 : images[0].n;
  OPoly r(m);
  for (const auto& [e, c] : terms) {
    OPoly t = constant(m, c);
    for (int i = 0; i < n; ++i) t = t * images[i].pow(e[i]);
    r = r + t;
  }
  return r;
}

OPoly from_library(const wdeg::Polynomial& p) {
  const int n = static_cast<int>(p.nvars());
  OPoly r(n);
  for (const wdeg::Term& t : p.terms()) {
    Exponents e(n);
    for (int i = 0; i < n; ++i) e[i] = static_cast<int>(t.mono[i]);
    r.terms[e] = t.coef;
  }
  return r;
}

std::optional<std::int64_t> weighted_degree(const OPoly& p, const std::vector<std::int64_t>& w) {
  std::optional<std::int64_t> best;
  for (const auto& [e, c] : p.terms) {
    std::int64_t d = 0;
    for (int i = 0; i < p.n; ++i) d += e[i] * w[i];
    if (!best || d > *best) best = d;
  }
  return best;
}

int total_degree(const OPoly& p) {
  int best = -1;
  for (const auto& [e, c] : p.terms) {
    int d = 0;
    for (int v : e) d += v;
    best = std::max(best, d);
  }
  return best;
}

namespace {

int matrix_rank(std::vector<std::vector<mpq_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t k = r + 1; k < rows; ++k) {
      if (a[k][c] == 0) continue;
      const mpq_class f = a[k][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[k][j] -= f * a[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace

int jacobian_rank_at(const std::vector<OPoly>& fs, const std::vector<mpq_class>& point) {
  std::vector<std::vector<mpq_class>> a;
  for (const OPoly& f : fs) {
    std::vector<mpq_class> row;
    for (int j = 0; j < f.n; ++j) row.push_back(f.diff(j).eval(point));
    a.push_back(std::move(row));
  }
  return matrix_rank(std::move(a));
}

bool independent_by_rank(const std::vector<OPoly>& fs, std::uint64_t seed) {
  if (fs.empty()) return true;
  const int n = fs[0].n;
  if (static_cast<int>(fs.size()) > n) return false;
  std::mt19937_64 gen(seed);
  int best = 0;
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<mpq_class> pt;
    for (int i = 0; i < n; ++i) pt.emplace_back(static_cast<long>(gen() % 201) - 100);
    best = std::max(best, jacobian_rank_at(fs, pt));
  }
  return best == static_cast<int>(fs.size());
}

namespace {

OPoly det(const std::vector<std::vector<OPoly>>& m, std::vector<int>& cols, std::size_t row, int nv) {
  if (row == m.size()) return OPoly::constant(nv, 1);
  OPoly acc(nv);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const int c = cols[k];
    if (m[row][c].zero()) continue;
    cols.erase(cols.begin() + static_cast<long>(k));
    OPoly minor = det(m, cols, row + 1, nv);
    cols.insert(cols.begin() + static_cast<long>(k), c);
    OPoly t = m[row][c] * minor;
    acc = (k % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

}  // namespace

OPoly resultant_kernel(const std::vector<mpq_class>& p, const std::vector<mpq_class>& q) {
  // Coefficients in k[y1, y2] of a(t) = p(t) - y1 and b(t) = q(t) - y2.
  auto coeffs = [](const std::vector<mpq_class>& c, int y) {
    std::vector<OPoly> out;
    for (const mpq_class& v : c) out.push_back(OPoly::constant(2, v));
    out[0] = out[0] - OPoly::var(2, y);
    return out;
  };
  const std::vector<OPoly> a = coeffs(p, 0);
  const std::vector<OPoly> b = coeffs(q, 1);
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  const int size = da + db;
  std::vector<std::vector<OPoly>> m(size, std::vector<OPoly>(size, OPoly(2)));
  // Rows hold t^k * a and t^k * b with the highest power in column 0.
  for (int r = 0; r < db; ++r) {
    for (int i = 0; i <= da; ++i) m[r][r + da - i] = a[i];
  }
  for (int r = 0; r < da; ++r) {
    for (int i = 0; i <= db; ++i) m[db + r][r + db - i] = b[i];
  }
  std::vector<int> cols(size);
  for (int i = 0; i < size; ++i) cols[i] = i;
  return det(m, cols, 0, 2);
}

bool proportional(const OPoly& a, const OPoly& b) {
  if (a.zero() || b.zero()) return a.zero() && b.zero();
  if (a.terms.size() != b.terms.size()) return false;
  const mpq_class ratio = a.terms.begin()->second / b.terms.begin()->second;
  return a == b.scaled(ratio);
}

std::vector<OPoly> from_library(const wdeg::UPoly& phi) {
  std::vector<OPoly> out;
  for (const wdeg::Polynomial& c : phi.coefficients()) out.push_back(from_library(c));
  return out;
}

std::optional<std::int64_t> deg_wg(const std::vector<OPoly>& phi, const OPoly& g,
                                   const std::vector<std::int64_t>& w) {
  std::optional<std::int64_t> best;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const auto d = weighted_degree(phi[i] * g.pow(static_cast<int>(i)), w);
    if (d && (!best || *d > *best)) best = d;
  }
  return best;
}

int m_by_definition(std::vector<OPoly> phi, const OPoly& g, const std::vector<std::int64_t>& w) {
  for (int i = 0;; ++i) {
    OPoly value(g.n);
    for (std::size_t j = 0; j < phi.size(); ++j) value = value + phi[j] * g.pow(static_cast<int>(j));
    if (deg_wg(phi, g, w) == weighted_degree(value, w)) return i;
    if (phi.empty()) throw std::logic_error("m undefined for zero Phi");
    // d/dy
    std::vector<OPoly> next;
    for (std::size_t j = 1; j < phi.size(); ++j) next.push_back(phi[j].scaled(static_cast<long>(j)));
    while (!next.empty() && next.back().zero()) next.pop_back();
    phi = std::move(next);
  }
}

}  // namespace oracle
