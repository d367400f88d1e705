#include "wdeg/sualg.hpp"

#include <numeric>

#include "wdeg/errors.hpp"
#include "wdeg/forms.hpp"

namespace wdeg {

namespace {

std::vector<Polynomial> initials_of(std::span<const Polynomial> fs,
                                    const WeightVector& w) {
  std::vector<Polynomial> out;
  out.reserve(fs.size());
  for (const Polynomial& f : fs) out.push_back(initial_form(f, w));
  return out;
}

}  // namespace

HomogPairData homogeneous_pair(const Polynomial& f, const Polynomial& g,
                               const WeightVector& w) {
  if (f.is_zero() || g.is_zero()) throw InputError("homogeneous pair needs nonzero f, g");
  if (!is_homogeneous(f, w) || !is_homogeneous(g, w)) {
    throw InputError("homogeneous pair needs w-homogeneous f and g");
  }
  const Gamma df = weighted_degree(f, w).value();
  const Gamma dg = weighted_degree(g, w).value();
  if (!df.is_positive() || !dg.is_positive()) {
    throw InputError("homogeneous pair needs positive degrees, got " +
                     df.str() + " and " + dg.str());
  }
  const Polynomial pair[] = {f, g};
  if (algebraically_independent(pair)) {
    throw InputError("f and g are algebraically independent");
  }

  // First level where either degree is nonzero; both must be nonzero there
  // for l_fg * dg = l_gf * df to have a positive solution.
  std::size_t level = 0;
  while (level < df.levels() && df[level] == 0 && dg[level] == 0) ++level;
  if (level == df.levels() || df[level] == 0 || dg[level] == 0) {
    throw InternalError("degrees " + df.str() + " and " + dg.str() +
                        " are not proportional");
  }
  const std::int64_t d = std::gcd(df[level], dg[level]);
  HomogPairData out;
  out.l_fg = static_cast<std::uint64_t>(df[level] / d);
  out.l_gf = static_cast<std::uint64_t>(dg[level] / d);
  if (dg.scaled(static_cast<std::int64_t>(out.l_fg)) !=
      df.scaled(static_cast<std::int64_t>(out.l_gf))) {
    throw InternalError("degrees " + df.str() + " and " + dg.str() +
                        " are not proportional");
  }

  const Polynomial lhs = g.pow(static_cast<std::uint32_t>(out.l_fg));
  const Polynomial rhs = f.pow(static_cast<std::uint32_t>(out.l_gf));
  const Rational denom = rhs.coefficient(lhs.leading_term().mono);
  if (denom != 0) out.alpha = lhs.leading_term().coef / denom;
  if (denom == 0 || lhs != rhs * out.alpha) {
    throw InternalError("g^" + std::to_string(out.l_fg) + " is not a scalar multiple of f^" +
                        std::to_string(out.l_gf));
  }
  return out;
}

FieldExtension field_ext_degree(std::span<const Polynomial> hs,
                                const Polynomial& g, const WeightVector& w,
                                const GroebnerOptions& options) {
  if (g.is_zero()) throw InputError("field extension degree of 0");
  const std::vector<Polynomial> hw = initial_algebra_gens(hs, w);
  const Polynomial gw = initial_form(g, w);

  std::vector<Polynomial> all = hw;
  all.push_back(gw);
  FieldExtension out;
  if (algebraically_independent(all)) return out;

  out.algebraic = true;
  out.degree = min_annihilating(hw, gw, options).degree;

  if (hw.size() == 1 && w.is_integer()) {
    const Gamma dh = weighted_degree(hw[0], w).value();
    const Gamma dg = weighted_degree(gw, w).value();
    if (dh.is_positive() && dg.is_positive()) {
      const std::int64_t formula = dh[0] / std::gcd(dh[0], dg[0]);
      out.gcd_formula = static_cast<std::uint32_t>(formula);
      if (*out.gcd_formula != out.degree) {
        throw InternalError("extension degree " + std::to_string(out.degree) +
                            " disagrees with deg f / gcd = " +
                            std::to_string(formula));
      }
    }
  }
  return out;
}

std::vector<Polynomial> initial_algebra_gens(std::span<const Polynomial> gs,
                                             const WeightVector& w) {
  if (gs.empty()) throw InputError("initial algebra needs generators");
  for (const Polynomial& g : gs) {
    if (g.is_zero()) throw InputError("initial form of 0 is undefined");
  }
  std::vector<Polynomial> out = initials_of(gs, w);
  if (!algebraically_independent(out)) {
    throw InputError("initial forms are algebraically dependent");
  }
  return out;
}

InitialGeneration initial_generation_check(std::span<const Polynomial> fs,
                                           const WeightVector& w,
                                           const GroebnerOptions& options) {
  if (fs.empty()) throw InputError("initial generation check needs a map");
  const std::size_t n = fs[0].nvars();
  if (fs.size() != n) {
    throw InputError("expected " + std::to_string(n) + " polynomials, got " +
                     std::to_string(fs.size()));
  }
  for (const Polynomial& f : fs) {
    if (f.is_zero()) throw InputError("map component is zero");
  }
  const std::vector<Polynomial> initials = initials_of(fs, w);
  InitialGeneration out;
  out.independent = algebraically_independent(initials);

  const SubalgebraMembership membership(initials, options);
  out.initials_generate = true;
  for (std::size_t i = 0; i < n && out.initials_generate; ++i) {
    out.initials_generate = membership.contains(Polynomial::variable(n, i));
  }
  out.equivalent = out.independent == out.initials_generate;
  return out;
}

}  // namespace wdeg
