#include "wdeg/ineq.hpp"

#include <numeric>

#include "wdeg/errors.hpp"
#include "wdeg/forms.hpp"
#include "wdeg/sualg.hpp"

namespace wdeg {

void IneqReport::put(std::string key, Quantity value) {
  intermediates.emplace_back(std::move(key), std::move(value));
}

void IneqReport::note(std::string key, std::string text) {
  polynomials.emplace_back(std::move(key), std::move(text));
}

void IneqReport::check(std::string key, bool ok) {
  side_checks.emplace_back(std::move(key), ok);
}

const Quantity* IneqReport::find(std::string_view key) const {
  for (const auto& [k, v] : intermediates) {
    if (k == key) return &v;
  }
  return nullptr;
}

bool IneqReport::side_checks_pass() const {
  for (const auto& [k, ok] : side_checks) {
    if (!ok) return false;
  }
  return true;
}

namespace {

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Degree zero_degree(const WeightVector& w) { return Degree(Gamma::zero(w.levels())); }

bool nonpositive(const Degree& d, const WeightVector& w) {
  return d.is_minus_infinity() || d <= zero_degree(w);
}

// Everything the inequalities share: the expanded Phi and the defect M.
struct Setup {
  std::size_t n = 0;
  UPoly phi;
  Degree deg_omega;
  Degree deg_omega_dg;
  Degree deg_g;
  Degree M;
};

Setup prepare(std::span<const Polynomial> fs, const UPoly& phi_z,
              const Polynomial& g, const WeightVector& w) {
  if (fs.empty()) throw InputError("need at least one f");
  Setup s;
  s.n = fs[0].nvars();
  for (const Polynomial& f : fs) {
    if (f.nvars() != s.n) throw InputError("f's live in different rings");
  }
  if (g.nvars() != s.n) throw InputError("g lives in a different ring from the f's");
  if (w.size() != s.n) {
    throw InputError("weight vector has " + std::to_string(w.size()) +
                     " entries for " + std::to_string(s.n) + " variables");
  }
  if (phi_z.nvars() != fs.size()) {
    throw InputError("Phi is written over " + std::to_string(phi_z.nvars()) +
                     " coordinates but " + std::to_string(fs.size()) +
                     " f's were given");
  }
  if (g.is_zero()) throw InputError("g must be nonzero");
  if (phi_z.is_zero()) throw InputError("Phi must be nonzero");
  if (!algebraically_independent(fs)) {
    throw InputError("the f's are algebraically dependent");
  }
  s.phi = substitute_coefficients(phi_z, fs);

  std::vector<DiffForm> dfs;
  for (const Polynomial& f : fs) dfs.push_back(differential(f));
  const DiffForm omega = wedge_all(dfs, s.n);
  s.deg_omega = form_degree(omega, w);
  // With r = n the (n+1)-form omega ^ dg is zero.
  s.deg_omega_dg = fs.size() < s.n ? form_degree(wedge(omega, differential(g)), w)
                                   : Degree::minus_infinity(w.levels());
  s.deg_g = weighted_degree(g, w);
  s.M = s.deg_omega_dg - s.deg_omega - s.deg_g;
  return s;
}

void put_setup(IneqReport& report, const Setup& s) {
  report.put("deg_omega", s.deg_omega);
  report.put("deg_omega_dg", s.deg_omega_dg);
  report.put("deg_g", s.deg_g);
  report.put("M", s.M);
}

std::string str_over_z(const UPoly& p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.nvars(); ++i) names.push_back("z" + std::to_string(i + 1));
  names.push_back("y");
  return p.str(names);
}

std::vector<Polynomial> initials_of(std::span<const Polynomial> fs,
                                    const WeightVector& w) {
  std::vector<Polynomial> out;
  for (const Polynomial& f : fs) out.push_back(initial_form(f, w));
  return out;
}

// The degree hypothesis on A = k[f]: every nonzero element has w-degree
// >= 0.  Decided by a sufficient condition; the initials must also be
// independent so that K^w is the fraction field of k[f^w].
std::vector<Polynomial> require_graded_algebra(std::span<const Polynomial> fs,
                                               const WeightVector& w) {
  std::vector<Polynomial> initials = initials_of(fs, w);
  if (!algebraically_independent(initials)) {
    throw InputError(
        "initial forms of the f's are algebraically dependent; the initial "
        "algebra is not computable here");
  }
  if (!w.all_nonnegative()) {
    for (const Polynomial& f : fs) {
      if (weighted_degree(f, w) < zero_degree(w)) {
        throw InputError("cannot certify deg_w h >= 0 on k[f]: deg_w of " +
                         f.str() + " is negative");
      }
    }
  }
  return initials;
}

Polynomial jacobian_from_forms(std::span<const Polynomial> fs, std::size_t n) {
  std::vector<DiffForm> dfs;
  for (const Polynomial& f : fs) dfs.push_back(differential(f));
  const DiffForm top = wedge_all(dfs, n);
  const DiffForm::IndexSet full =
      n >= 32 ? ~DiffForm::IndexSet{0} : (DiffForm::IndexSet{1} << n) - 1;
  return top.coefficient(full);
}

}  // namespace

IneqReport check_main_inequality(std::span<const Polynomial> fs,
                                 const UPoly& phi_z, const Polynomial& g,
                                 const WeightVector& w) {
  const Setup s = prepare(fs, phi_z, g, w);
  IneqReport report;
  report.name = "main";
  const Degree dwg = deg_wg(s.phi, g, w);
  const std::uint32_t m = m_wg(s.phi, g, w);
  report.lhs = weighted_degree(apply(s.phi, g), w);
  report.rhs = dwg + s.M.scaled(m);
  report.holds = report.lhs >= report.rhs;
  report.degenerate = s.M.is_minus_infinity() && m >= 1;
  report.put("r", as_int(fs.size()));
  put_setup(report, s);
  report.put("deg_wg_Phi", dwg);
  report.put("m", static_cast<std::int64_t>(m));
  report.check("deg_wg_Phi_bounds_lhs", dwg >= report.lhs);
  return report;
}

IneqReport check_degree_quotient_bound(std::span<const Polynomial> fs,
                                       const UPoly& phi_z, const Polynomial& g,
                                       const WeightVector& w,
                                       const GroebnerOptions& options) {
  const Setup s = prepare(fs, phi_z, g, w);
  require_graded_algebra(fs, w);
  const FieldExtension ext = field_ext_degree(fs, g, w, options);
  if (!ext.algebraic) {
    throw InputError("g^w is transcendental over K^w; the bound needs it algebraic");
  }
  IneqReport report;
  report.name = "t34a";
  const std::int64_t e = s.phi.degree();
  const std::int64_t N = ext.degree;
  const std::int64_t a = e / N;
  const std::int64_t b = e % N;
  const Gamma dg = s.deg_g.value();
  const std::uint32_t m = m_wg(s.phi, g, w);

  const Degree rhs_expanded = Degree(dg.scaled(e)) + s.M.scaled(a);
  const Degree rhs_grouped = (Degree(dg.scaled(N)) + s.M).scaled(a) + Degree(dg.scaled(b));
  report.lhs = weighted_degree(apply(s.phi, g), w);
  report.rhs = rhs_expanded;
  report.holds = report.lhs >= report.rhs;
  report.degenerate = s.M.is_minus_infinity() && a >= 1;

  report.put("r", as_int(fs.size()));
  put_setup(report, s);
  report.put("deg_y_Phi", e);
  report.put("N", N);
  report.put("a", a);
  report.put("b", b);
  report.put("m", static_cast<std::int64_t>(m));
  report.put("deg_wg_Phi", deg_wg(s.phi, g, w));

  report.check("rhs_forms_agree", rhs_expanded == rhs_grouped);
  report.check("quotient_residue", a * N + b == e && 0 <= b && b < N);
  report.check("M_nonpositive", nonpositive(s.M, w));
  report.check("m_at_most_a", m <= a);
  const std::int64_t initial_deg_y = initial_wg(s.phi, g, w).degree();
  report.check("m_at_most_initial_quotient", m <= initial_deg_y / N);
  report.check("deg_wg_Phi_at_least_top_term",
               deg_wg(s.phi, g, w) >= Degree(dg.scaled(e)));
  return report;
}

IneqReport check_annihilator_bound(std::span<const Polynomial> fs,
                                   const UPoly& phi_z, const Polynomial& g,
                                   const WeightVector& w,
                                   const GroebnerOptions& options) {
  const Setup s = prepare(fs, phi_z, g, w);
  const std::vector<Polynomial> initials = require_graded_algebra(fs, w);
  if (s.deg_g < zero_degree(w)) throw InputError("deg_w g must be nonnegative");

  IneqReport report;
  report.name = "t34b";
  const std::uint32_t m = m_wg(s.phi, g, w);
  const Degree dwg = deg_wg(s.phi, g, w);
  report.lhs = weighted_degree(apply(s.phi, g), w);
  report.put("r", as_int(fs.size()));
  put_setup(report, s);
  report.put("m", static_cast<std::int64_t>(m));
  report.put("deg_wg_Phi", dwg);

  const Polynomial gw = initial_form(g, w);
  const Annihilator ann = min_annihilating(initials, gw, options);
  if (!ann.exists) {
    // Transcendental: m = 0, so the right side is the empty sum.
    report.rhs = zero_degree(w);
    report.put("algebraic", std::int64_t{0});
    report.check("transcendental_forces_m_zero", m == 0);
  } else {
    const UPoly p = substitute_coefficients(ann.polynomial, initials);
    const Degree dp = deg_wg(p, g, w);
    report.rhs = (dp + s.M).scaled(m);
    report.degenerate = s.M.is_minus_infinity() && m >= 1;
    report.put("algebraic", std::int64_t{1});
    report.put("deg_y_P", static_cast<std::int64_t>(ann.degree));
    report.put("deg_wg_P", dp);
    report.note("P", str_over_z(ann.polynomial));
    report.check("deg_wg_Phi_at_least_m_deg_wg_P", dwg >= dp.scaled(m));
    // Phi^{w,g} = P^m H with H(g^w) != 0.
    const UPoly initial = initial_wg(s.phi, g, w);
    UPoly pm = UPoly(s.n, {Polynomial::constant(s.n, 1)});
    for (std::uint32_t i = 0; i < m; ++i) pm = pm * p;
    const auto h = exact_quotient(initial.to_polynomial(), pm.to_polynomial());
    report.check("initial_has_P_power_factor",
                 h.has_value() && !apply(UPoly::from_polynomial(*h, s.n), gw).is_zero());
  }
  report.holds = report.lhs >= report.rhs;
  return report;
}

IneqReport check_lcm_bound(const Polynomial& f, const UPoly& phi_z,
                           const Polynomial& g, const WeightVector& w,
                           const GroebnerOptions& options) {
  if (!w.is_integer()) throw InputError("the lcm bound needs integer weights");
  if (f.is_constant() || g.is_constant()) {
    throw InputError("f and g must be nonconstant");
  }
  const Polynomial fs[] = {f};
  const Setup s = prepare(fs, phi_z, g, w);
  const std::int64_t df = weighted_degree(f, w).value()[0];
  const std::int64_t dg = s.deg_g.value()[0];
  if (df <= 0 || dg <= 0) {
    throw InputError("deg_w f and deg_w g must be positive, got " +
                     std::to_string(df) + " and " + std::to_string(dg));
  }
  IneqReport report;
  report.name = "su";
  const std::int64_t gcd = std::gcd(df, dg);
  const std::int64_t lcm = df / gcd * dg;
  const std::int64_t divisor = df / gcd;
  const std::int64_t e = s.phi.degree();
  const std::int64_t a = e / divisor;
  const std::int64_t b = e % divisor;
  const std::uint32_t m = m_wg(s.phi, g, w);

  report.lhs = weighted_degree(apply(s.phi, g), w);
  report.rhs = (Degree(lcm) + s.M).scaled(a) + Degree(b * dg);
  report.holds = report.lhs >= report.rhs;
  report.degenerate = s.M.is_minus_infinity() && a >= 1;

  put_setup(report, s);
  report.put("deg_f", df);
  report.put("lcm", lcm);
  report.put("N", divisor);
  report.put("deg_y_Phi", e);
  report.put("a", a);
  report.put("b", b);
  report.put("m", static_cast<std::int64_t>(m));

  report.check("M_nonpositive", nonpositive(s.M, w));
  report.check("quotient_residue", a * divisor + b == e && b < divisor);
  const FieldExtension ext = field_ext_degree(fs, g, w, options);
  report.put("algebraic", std::int64_t{ext.algebraic ? 1 : 0});
  if (ext.algebraic) {
    report.check("extension_degree_matches_gcd_formula", ext.degree == divisor);
  } else {
    report.check("transcendental_forces_m_zero", m == 0);
  }
  return report;
}

DeltaData delta_invariant(std::span<const Polynomial> fs, const WeightVector& w,
                          const GroebnerOptions& options) {
  if (fs.empty()) throw InputError("delta needs a map");
  const std::size_t n = fs[0].nvars();
  if (fs.size() != n) {
    throw InputError("delta needs n = " + std::to_string(n) +
                     " polynomials, got " + std::to_string(fs.size()));
  }
  if (w.size() != n) throw InputError("weight vector length does not match n");
  for (const Polynomial& f : fs) {
    if (f.is_zero()) throw InputError("map component is zero");
  }
  const std::vector<Polynomial> initials = initials_of(fs, w);
  if (algebraically_independent(initials)) {
    throw InputError("initial forms are independent (transcendence degree n)");
  }
  DeltaData out;
  bool found = false;
  // Omitting index j, from the last down, walks the (n-1)-subsets in
  // lexicographic order.
  for (std::size_t j = n; j-- > 0 && !found;) {
    std::vector<Polynomial> sub;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      sub.push_back(initials[i]);
      idx.push_back(i);
    }
    if (algebraically_independent(sub)) {
      out.subset = std::move(idx);
      out.complement = j;
      found = true;
    }
  }
  if (!found) throw InputError("initial forms have transcendence degree below n - 1");

  const Ideal kernel = map_kernel(initials, options);
  try {
    out.q = principal_generator(kernel, options);
  } catch (const InputError& e) {
    throw InternalError(std::string("kernel of a height-one prime should be principal: ") +
                        e.what());
  }
  std::vector<Gamma> wf;
  for (const Polynomial& f : fs) wf.push_back(weighted_degree(f, w).value());
  out.w_f = WeightVector(std::move(wf));
  out.delta = weighted_degree(out.q, out.w_f);
  return out;
}

IneqReport check_automorphism_bound(
    std::span<const Polynomial> fs, const WeightVector& w,
    std::optional<std::span<const Polynomial>> inverse,
    const GroebnerOptions& options) {
  if (fs.empty()) throw InputError("need a map");
  const std::size_t n = fs[0].nvars();
  if (fs.size() != n) throw InputError("need exactly n polynomials");
  if (w.size() != n) throw InputError("weight vector length does not match n");
  if (!w.all_nonnegative()) throw InputError("weights must be nonnegative");
  const Polynomial jac = jacobian_from_forms(fs, n);
  if (!jac.is_constant() || jac.is_zero()) {
    throw InputError("Jacobian determinant is not a nonzero constant: " + jac.str());
  }

  // x_i = inverse_i(f_1..f_n), verified or computed.
  std::vector<Polynomial> inv;
  if (inverse) {
    if (inverse->size() != n) throw InputError("inverse needs n components");
    for (std::size_t i = 0; i < n; ++i) {
      if (substitute_vars((*inverse)[i], fs) != Polynomial::variable(n, i)) {
        throw InputError("given inverse does not invert the map at x" +
                         std::to_string(i + 1));
      }
    }
    inv.assign(inverse->begin(), inverse->end());
  } else {
    const SubalgebraMembership membership(fs, options);
    for (std::size_t i = 0; i < n; ++i) {
      auto expr = membership.express(Polynomial::variable(n, i));
      if (!expr) {
        throw InputError("x" + std::to_string(i + 1) +
                         " is not in k[f]; the map is not an automorphism");
      }
      inv.push_back(std::move(*expr));
    }
  }

  const DeltaData d = delta_invariant(fs, w, options);
  IneqReport report;
  report.name = "t43";
  Gamma sum_deg = Gamma::zero(w.levels());
  for (const Polynomial& f : fs) sum_deg += weighted_degree(f, w).value();
  const Gamma sum_w = w.sum();
  const Gamma max_w = w.max();
  report.lhs = Degree(sum_deg);
  report.rhs = d.delta + Degree(sum_w - max_w);
  report.holds = report.lhs >= report.rhs;
  report.put("delta", d.delta);
  report.put("sum_deg", Degree(sum_deg));
  report.put("sum_w", Degree(sum_w));
  report.put("max_w", Degree(max_w));
  report.note("Q", d.q.str([&] {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
    return names;
  }()));
  report.note("w_f", d.w_f.str());

  std::vector<Polynomial> sub;
  for (std::size_t i : d.subset) sub.push_back(fs[i]);
  const Polynomial& g = fs[d.complement];
  report.put("g_index", as_int(d.complement + 1));

  std::vector<DiffForm> dfs;
  for (const Polynomial& f : fs) dfs.push_back(differential(f));
  report.check("jacobian_form_degree_is_weight_sum",
               form_degree(wedge_all(dfs, n), w) == Degree(sum_w));

  // An x_l outside k[f^w] exists because the initials are dependent.
  const std::vector<Polynomial> initials = initials_of(fs, w);
  const SubalgebraMembership initial_algebra(initials, options);
  std::optional<std::size_t> l;
  for (std::size_t i = 0; i < n && !l; ++i) {
    if (!initial_algebra.contains(Polynomial::variable(n, i))) l = i;
  }
  if (!l) throw InternalError("initials generate k[x] although they are dependent");
  report.put("l", as_int(*l + 1));

  const UPoly phi_z = UPoly::from_polynomial(inv[*l], d.complement);
  const Setup s = prepare(sub, phi_z, g, w);
  put_setup(report, s);
  report.check("M_lower_bound",
               s.M >= Degree(sum_w) - Degree(sum_deg));
  report.check("Phi_of_g_is_x_l",
               apply(s.phi, g) == Polynomial::variable(n, *l));
  const std::uint32_t m = m_wg(s.phi, g, w);
  report.put("m", static_cast<std::int64_t>(m));
  report.check("m_positive", m >= 1);

  std::vector<Polynomial> sub_initials;
  for (std::size_t i : d.subset) sub_initials.push_back(initials[i]);
  const Annihilator ann = min_annihilating(sub_initials, initials[d.complement], options);
  if (!ann.exists) throw InternalError("g^w is transcendental although the initials are dependent");
  const Degree dp = deg_wg(substitute_coefficients(ann.polynomial, sub_initials), g, w);
  report.put("deg_wg_P", dp);
  report.note("P", str_over_z(ann.polynomial));
  report.check("deg_wg_P_equals_delta", dp == d.delta);
  const Degree w_l(w[*l]);
  report.check("annihilator_bound_at_x_l", w_l >= (dp + s.M).scaled(m));
  return report;
}

PlaneBoundResult check_plane_bound(const Polynomial& f1, const Polynomial& f2,
                                   const WeightVector& w,
                                   const GroebnerOptions& options) {
  if (f1.nvars() != 2 || f2.nvars() != 2) throw InputError("plane bound needs n = 2");
  if (w.size() != 2 || !w.is_integer() || !w.all_nonnegative()) {
    throw InputError("plane bound needs two nonnegative integer weights");
  }
  const Polynomial fs[] = {f1, f2};
  const Polynomial jac = jacobian_from_forms(fs, 2);
  if (!jac.is_constant() || jac.is_zero()) {
    throw InputError("Jacobian determinant is not a nonzero constant: " + jac.str());
  }
  PlaneBoundResult out;
  out.report.name = "cor44";
  const std::vector<Polynomial> initials = initials_of(fs, w);
  if (algebraically_independent(initials)) return out;
  out.applicable = true;

  IneqReport& report = out.report;
  const std::int64_t d1 = weighted_degree(f1, w).value()[0];
  const std::int64_t d2 = weighted_degree(f2, w).value()[0];
  report.put("deg_f1", d1);
  report.put("deg_f2", d2);
  report.lhs = Degree(d1 + d2);
  const bool positive = d1 > 0 && d2 > 0;
  report.check("degrees_positive", positive);
  if (!positive) {
    report.rhs = report.lhs;
    report.holds = false;
    return out;
  }
  const std::int64_t lcm = std::lcm(d1, d2);
  const std::int64_t min_w = std::min(w[0][0], w[1][0]);
  report.rhs = Degree(lcm + min_w);
  report.holds = report.lhs >= report.rhs;
  report.put("lcm", lcm);
  report.put("min_w", min_w);
  const DeltaData d = delta_invariant(fs, w, options);
  report.put("delta", d.delta);
  report.check("delta_equals_lcm", d.delta == Degree(lcm));
  out.divisibility = d2 % d1 == 0 || d1 % d2 == 0;
  return out;
}

}  // namespace wdeg
