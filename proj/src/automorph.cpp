#include "wdeg/automorph.hpp"

#include <algorithm>

#include "wdeg/errors.hpp"
#include "wdeg/random.hpp"

namespace wdeg {

PolyMap::PolyMap(std::vector<Polynomial> images) : images_(std::move(images)) {
  for (const Polynomial& p : images_) {
    if (p.nvars() != images_.size()) {
      throw InputError("a map of k[x1..x" + std::to_string(images_.size()) +
                       "] needs images in the same ring");
    }
  }
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(n, i));
  PolyMap out(std::move(images));
  out.tame_ = true;
  return out;
}

namespace {

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InputError("singular matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rational scale = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

PolyMap step_inverse(const GeneratorStep& step, std::size_t n) {
  if (const auto* e = std::get_if<ElementaryStep>(&step)) {
    const Rational inv_alpha = 1 / e->alpha;
    return elementary(n, e->index, inv_alpha, e->shift * (-inv_alpha));
  }
  const auto& a = std::get<AffineStep>(step);
  auto inv = invert_matrix(a.matrix);
  std::vector<Rational> offset(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) offset[i] -= inv[i][j] * a.offset[j];
  }
  return affine(std::move(inv), std::move(offset));
}

}  // namespace

PolyMap PolyMap::inverse() const {
  if (!tame_) throw InputError("inverse needs a map built from generators");
  // (g_1 o ... o g_k)^-1 = g_k^-1 o ... o g_1^-1
  PolyMap out = identity(nvars());
  for (const GeneratorStep& step : provenance_) {
    out = compose(step_inverse(step, nvars()), out);
  }
  return out;
}

PolyMap elementary(std::size_t n, std::size_t l, const Rational& alpha,
                   const Polynomial& shift) {
  if (l >= n) throw InputError("elementary map index out of range");
  if (alpha == 0) throw InputError("elementary map needs alpha != 0");
  if (shift.nvars() != n) throw InputError("shift lives in the wrong ring");
  if (shift.involves(l)) {
    throw InputError("shift " + shift.str() + " involves x" + std::to_string(l + 1));
  }
  PolyMap out = PolyMap::identity(n);
  out.images_[l] = Polynomial::variable(n, l) * alpha + shift;
  out.provenance_.push_back(ElementaryStep{l, alpha, shift});
  return out;
}

PolyMap affine(std::vector<std::vector<Rational>> matrix, std::vector<Rational> offset) {
  const std::size_t n = matrix.size();
  if (offset.size() != n) throw InputError("offset length does not match the matrix");
  for (const auto& row : matrix) {
    if (row.size() != n) throw InputError("affine map needs a square matrix");
  }
  if (determinant(matrix) == 0) throw InputError("affine map matrix is singular");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p = Polynomial::constant(n, offset[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] != 0) p += Polynomial::variable(n, j) * matrix[i][j];
    }
    images.push_back(std::move(p));
  }
  PolyMap out(std::move(images));
  out.tame_ = true;
  out.provenance_.push_back(AffineStep{std::move(matrix), std::move(offset)});
  return out;
}

PolyMap compose(const PolyMap& sigma, const PolyMap& tau) {
  if (sigma.nvars() != tau.nvars()) throw InputError("composing maps of different sizes");
  std::vector<Polynomial> images;
  for (const Polynomial& s : sigma.images()) images.push_back(substitute_vars(s, tau.images()));
  PolyMap out(std::move(images));
  out.tame_ = sigma.tame_ && tau.tame_;
  if (out.tame_) {
    out.provenance_ = sigma.provenance_;
    out.provenance_.insert(out.provenance_.end(), tau.provenance_.begin(),
                           tau.provenance_.end());
  }
  return out;
}

namespace {

Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& m,
                        std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.size();
  if (row == n) return Polynomial::constant(m[0][0].nvars(), 1);
  Polynomial acc(m[0][0].nvars());
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!m[row][c].is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      Polynomial minor = cofactor_det(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      Polynomial term = m[row][c] * minor;
      acc = sign > 0 ? acc + term : acc - term;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

Polynomial jacobian_det(const PolyMap& sigma) {
  const std::size_t n = sigma.nvars();
  if (n == 0) return Polynomial::constant(0, 1);
  std::vector<std::vector<Polynomial>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(partial_derivative(sigma[i], j));
  }
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  return cofactor_det(m, cols, 0);
}

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= factor * a[col][j];
    }
  }
  return det;
}

namespace {

Polynomial nagata_s() {
  const Polynomial x1 = Polynomial::variable(3, 0);
  const Polynomial x2 = Polynomial::variable(3, 1);
  const Polynomial x3 = Polynomial::variable(3, 2);
  return x1 * x3 + x2 * x2;
}

}  // namespace

PolyMap nagata() {
  const Polynomial x1 = Polynomial::variable(3, 0);
  const Polynomial x2 = Polynomial::variable(3, 1);
  const Polynomial x3 = Polynomial::variable(3, 2);
  const Polynomial s = nagata_s();
  return PolyMap({x1 - Rational(2) * s * x2 - s * s * x3, x2 + s * x3, x3});
}

PolyMap nagata_inverse() {
  const Polynomial x1 = Polynomial::variable(3, 0);
  const Polynomial x2 = Polynomial::variable(3, 1);
  const Polynomial x3 = Polynomial::variable(3, 2);
  const Polynomial s = nagata_s();
  return PolyMap({x1 + Rational(2) * s * x2 - s * s * x3, x2 - s * x3, x3});
}

namespace {

std::int64_t max_total_degree(const PolyMap& m) {
  std::int64_t d = 0;
  for (const Polynomial& p : m.images()) d = std::max(d, p.total_degree());
  return d;
}

PolyMap random_affine(Rng& rng, std::size_t n, std::int64_t coeff_bound) {
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = rng.nonzero(-2, 2);
  // Left-multiply the diagonal by a few shears I + c e_ij.
  const std::int64_t shears = rng.uniform(0, static_cast<std::int64_t>(n) + 1);
  for (std::int64_t k = 0; k < shears && n > 1; ++k) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 2));
    if (j >= i) ++j;
    const Rational c(rng.nonzero(-coeff_bound, coeff_bound));
    for (std::size_t col = 0; col < n; ++col) a[i][col] += c * a[j][col];
  }
  std::vector<Rational> b(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) b[i] = rng.uniform(-coeff_bound, coeff_bound);
  return affine(std::move(a), std::move(b));
}

PolyMap random_elementary(Rng& rng, std::size_t n, std::uint32_t deg_bound,
                          std::int64_t coeff_bound) {
  const auto l = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
  const Rational alpha(rng.nonzero(-2, 2));
  RandomPolyShape shape;
  shape.nvars = n;
  shape.max_degree = deg_bound;
  shape.coeff_bound = coeff_bound;
  shape.max_terms = 3;
  shape.allowed = ~(std::uint32_t{1} << l);
  const Polynomial shift = n > 1 ? random_polynomial(rng, shape) : Polynomial(n);
  return elementary(n, l, alpha, shift);
}

}  // namespace

PolyMap random_tame(std::size_t n, std::size_t steps, std::uint32_t deg_bound,
                    std::int64_t coeff_bound, std::uint64_t seed,
                    std::uint32_t degree_cap) {
  if (n == 0) throw InputError("random map needs n >= 1");
  if (coeff_bound < 1) throw InputError("coefficient bound must be positive");
  Rng rng(seed);
  PolyMap map = PolyMap::identity(n);
  for (std::size_t s = 0; s < steps; ++s) {
    for (int attempt = 0;; ++attempt) {
      // After repeated overshoots fall back to an affine step, which never
      // raises the degree.
      const bool use_affine = attempt >= 16 || rng.coin();
      PolyMap step = use_affine ? random_affine(rng, n, coeff_bound)
                                : random_elementary(rng, n, deg_bound, coeff_bound);
      PolyMap next = compose(step, map);
      if (max_total_degree(next) <= static_cast<std::int64_t>(degree_cap)) {
        map = std::move(next);
        break;
      }
    }
  }
  return map;
}

DegreeDivisibility check_degree_divisibility(const PolyMap& sigma) {
  if (sigma.nvars() != 2) throw InputError("degree divisibility is stated for n = 2");
  DegreeDivisibility out;
  out.d1 = sigma[0].total_degree();
  out.d2 = sigma[1].total_degree();
  if (out.d1 <= 0 || out.d2 <= 0) {
    throw InputError("map components must be nonconstant");
  }
  out.divisible = out.d2 % out.d1 == 0 || out.d1 % out.d2 == 0;
  return out;
}

}  // namespace wdeg
