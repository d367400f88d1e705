#include "wdeg/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "wdeg/automorph.hpp"
#include "wdeg/errors.hpp"
#include "wdeg/forms.hpp"
#include "wdeg/ineq.hpp"
#include "wdeg/random.hpp"
#include "wdeg/upoly.hpp"

namespace wdeg {

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(
      rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

enum class WeightKind { kNonnegative, kPositive, kMixed, kLex, kLexNonnegative };

WeightVector random_weights(Rng& rng, std::size_t n, WeightKind kind) {
  std::vector<Gamma> ws;
  for (;;) {
    ws.clear();
    for (std::size_t i = 0; i < n; ++i) {
      switch (kind) {
        case WeightKind::kNonnegative: ws.emplace_back(rng.uniform(0, 3)); break;
        case WeightKind::kPositive: ws.emplace_back(rng.uniform(1, 3)); break;
        case WeightKind::kMixed: ws.emplace_back(rng.uniform(-2, 3)); break;
        case WeightKind::kLex: ws.push_back(Gamma{rng.uniform(-1, 2), rng.uniform(-2, 2)}); break;
        case WeightKind::kLexNonnegative: {
          const std::int64_t a = rng.uniform(0, 2);
          ws.push_back(Gamma{a, a == 0 ? rng.uniform(0, 2) : rng.uniform(-2, 2)});
          break;
        }
      }
    }
    // An all-zero weight makes every initial form the whole polynomial;
    // keep some of those but not most.
    const bool all_zero = std::all_of(ws.begin(), ws.end(), [](const Gamma& g) { return g.is_zero(); });
    if (!all_zero || rng.chance(1, 8)) break;
  }
  return WeightVector(std::move(ws));
}

Json weights_json(const WeightVector& w) {
  Json out = Json::array();
  for (const Gamma& g : w.weights()) out.push_back(to_json(g));
  return out;
}

Json polys_json(std::span<const Polynomial> ps) {
  Json out = Json::array();
  for (const Polynomial& p : ps) out.push_back(p.str());
  return out;
}

std::string z_str(const UPoly& p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.nvars(); ++i) names.push_back("z" + std::to_string(i + 1));
  names.push_back("y");
  return p.str(names);
}

RandomPolyShape shape_of(std::size_t n, std::uint32_t degree, std::size_t terms,
                         bool allow_constant = true) {
  RandomPolyShape s;
  s.nvars = n;
  s.max_degree = degree;
  s.coeff_bound = 3;
  s.max_terms = terms;
  s.allow_constant = allow_constant;
  return s;
}

// Terms of p whose w-degree lies strictly below `top`.
Polynomial below(const Polynomial& p, const WeightVector& w, const Degree& top) {
  PolynomialBuilder b(p.nvars());
  for (const Term& t : p.terms()) {
    if (Degree(monomial_weight(t.mono, w)) < top) b.add(t.mono, t.coef);
  }
  return std::move(b).build();
}

UPoly random_upoly(Rng& rng, std::size_t nvars, std::uint32_t max_y, std::uint32_t coeff_degree) {
  const std::size_t d = pick(rng, 0, max_y);
  std::vector<Polynomial> cs;
  for (std::size_t i = 0; i <= d; ++i) {
    const RandomPolyShape s = shape_of(nvars, coeff_degree, 3);
    if (i == d) {
      cs.push_back(random_nonzero_polynomial(rng, s));
    } else {
      cs.push_back(rng.coin() ? random_polynomial(rng, s) : Polynomial(nvars));
    }
  }
  return UPoly(nvars, std::move(cs));
}

UPoly upoly_pow(const UPoly& p, std::uint32_t e) {
  UPoly out(p.nvars(), {Polynomial::constant(p.nvars(), 1)});
  for (std::uint32_t i = 0; i < e; ++i) out = out * p;
  return out;
}

// f_1 .. f_r, Phi over z_1..z_r, and g.
struct Instance {
  std::vector<Polynomial> fs;
  UPoly phi_z;
  Polynomial g;
};

Json instance_json(const Instance& in, const WeightVector& w) {
  Json out;
  out["f"] = polys_json(in.fs);
  out["phi"] = z_str(in.phi_z);
  out["g"] = in.g.str();
  out["w"] = weights_json(w);
  return out;
}

// f_1 = u^p + noise and g = c u^q + noise, so y^p - c^p z_1^q nearly
// vanishes at (f, g); Phi is a multiple of it plus a small perturbation.
// With `clean_initials` the noise sits below the top w-degree, which makes
// f_1^w and g^w powers of u^w.
Instance planted_instance(Rng& rng, std::size_t n, std::size_t r, std::uint32_t deg,
                          const WeightVector& w, bool clean_initials) {
  const std::uint32_t u_deg = std::min<std::uint32_t>(2, deg);
  const Polynomial u = random_nonzero_polynomial(rng, shape_of(n, u_deg, 2, false));
  const auto du = static_cast<std::uint32_t>(std::max<std::int64_t>(1, u.total_degree()));
  std::uint32_t p = 1, q = 1;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const auto pp = static_cast<std::uint32_t>(rng.uniform(1, 3));
    const auto qq = static_cast<std::uint32_t>(rng.uniform(1, 3));
    if (pp * du <= deg && qq * du <= deg) {
      p = pp;
      q = qq;
      break;
    }
  }
  const Rational c(rng.nonzero(-2, 2));
  const Polynomial up = u.pow(p);
  const Polynomial uq = u.pow(q) * c;
  Polynomial f_noise = rng.chance(3, 4) ? random_polynomial(rng, shape_of(n, deg, 2)) : Polynomial(n);
  Polynomial g_noise = rng.chance(3, 4) ? random_polynomial(rng, shape_of(n, deg, 2)) : Polynomial(n);
  if (clean_initials) {
    f_noise = below(f_noise, w, weighted_degree(up, w));
    g_noise = below(g_noise, w, weighted_degree(uq, w));
  }
  Instance in;
  in.fs.push_back(up + f_noise);
  for (std::size_t i = 1; i < r; ++i) {
    in.fs.push_back(random_nonzero_polynomial(rng, shape_of(n, std::min<std::uint32_t>(deg, 3), 3, false)));
  }
  in.g = uq + g_noise;

  std::vector<Polynomial> base(p + 1, Polynomial(r));
  Rational cp = 1;
  for (std::uint32_t i = 0; i < p; ++i) cp *= c;
  base[0] = Polynomial::variable(r, 0).pow(q) * (-cp);
  base[p] = Polynomial::constant(r, 1);
  const std::uint32_t e = (p <= 2 && q <= 2 && rng.chance(1, 4)) ? 2 : 1;
  UPoly phi = upoly_pow(UPoly(r, std::move(base)), e) * random_upoly(rng, r, 1, 1);
  if (rng.coin()) phi = phi + random_upoly(rng, r, 2, 1);
  in.phi_z = std::move(phi);
  return in;
}

Instance random_instance(Rng& rng, std::size_t n, std::size_t r, std::uint32_t deg) {
  const std::uint32_t d = std::min<std::uint32_t>(deg, 3);
  Instance in;
  for (std::size_t i = 0; i < r; ++i) {
    in.fs.push_back(random_nonzero_polynomial(rng, shape_of(n, d, 3, false)));
  }
  in.g = random_nonzero_polynomial(rng, shape_of(n, d, 3));
  in.phi_z = random_upoly(rng, r, 3, 2);
  return in;
}

// The explicit comparison of the two ways to compute m.
void cross_check_m(TrialOutcome& out, const UPoly& phi, const Polynomial& g,
                   const WeightVector& w) {
  if (phi.is_zero() || g.is_zero()) return;
  const std::uint32_t by_def = m_wg(phi, g, w, MMethod::kByDefinition);
  const std::uint32_t by_init = m_wg(phi, g, w, MMethod::kByInitial);
  ++out.m_checks;
  out.evidence["m_cross_check"] = {by_def, by_init};
  if (by_def != by_init) {
    ++out.m_mismatches;
    out.status = TrialStatus::kFailed;
    out.message = "m by definition " + std::to_string(by_def) + " != m by initial form " +
                  std::to_string(by_init);
  }
}

void cross_check_random_m(TrialOutcome& out, Rng& rng, std::size_t n) {
  const WeightVector w = random_weights(rng, n, rng.coin() ? WeightKind::kMixed : WeightKind::kNonnegative);
  const UPoly phi = random_upoly(rng, n, 3, 2);
  const Polynomial g = random_nonzero_polynomial(rng, shape_of(n, 3, 3));
  cross_check_m(out, phi, g, w);
}

void settle(TrialOutcome& out, bool verdict, const char* what) {
  if (!verdict && out.status != TrialStatus::kFailed) {
    out.status = TrialStatus::kFailed;
    out.message = std::string(what) + " does not hold";
  }
}

std::size_t ring_size(const CampaignConfig& config, Rng& rng, std::size_t lo, std::size_t hi) {
  const std::size_t drawn = pick(rng, lo, hi);
  return config.n ? *config.n : drawn;
}

std::uint32_t degree_bound(const CampaignConfig& config, std::uint32_t fallback) {
  return config.deg_bound ? *config.deg_bound : fallback;
}

void main_trial(const CampaignConfig& config, Rng& rng, TrialOutcome& out) {
  const std::size_t n = ring_size(config, rng, 2, 3);
  const std::size_t r = pick(rng, 1, std::min<std::size_t>(2, n));
  const std::uint32_t deg = degree_bound(config, 6);
  const std::int64_t roll = rng.uniform(0, 9);
  const WeightKind kind = roll < 5 ? WeightKind::kNonnegative
                        : roll < 8 ? WeightKind::kMixed
                                   : WeightKind::kLex;
  const WeightVector w = random_weights(rng, n, kind);
  const Instance in = rng.coin() ? planted_instance(rng, n, r, deg, w, rng.coin())
                                 : random_instance(rng, n, r, deg);
  out.evidence["input"] = instance_json(in, w);
  cross_check_m(out, substitute_coefficients(in.phi_z, in.fs), in.g, w);
  const IneqReport report = check_main_inequality(in.fs, in.phi_z, in.g, w);
  out.evidence["main"] = to_json(report);
  settle(out, report.verdict(), "main inequality");
}

void t34_trial(const CampaignConfig& config, Rng& rng, TrialOutcome& out) {
  const std::size_t n = ring_size(config, rng, 2, 3);
  const std::size_t r = pick(rng, 1, std::min<std::size_t>(2, n));
  const std::uint32_t deg = degree_bound(config, 6);
  const WeightVector w =
      random_weights(rng, n, rng.chance(4, 5) ? WeightKind::kNonnegative : WeightKind::kLexNonnegative);
  const Instance in = rng.chance(3, 4) ? planted_instance(rng, n, r, deg, w, true)
                                       : random_instance(rng, n, r, deg);
  out.evidence["input"] = instance_json(in, w);
  cross_check_m(out, substitute_coefficients(in.phi_z, in.fs), in.g, w);
  const IneqReport b = check_annihilator_bound(in.fs, in.phi_z, in.g, w);
  out.evidence["t34b"] = to_json(b);
  settle(out, b.verdict(), "annihilator bound");
  // The degree-quotient form needs g^w algebraic over K^w.
  if (b.find("deg_wg_P") != nullptr) {
    const IneqReport a = check_degree_quotient_bound(in.fs, in.phi_z, in.g, w);
    out.evidence["t34a"] = to_json(a);
    settle(out, a.verdict(), "degree quotient bound");
  } else {
    out.evidence["t34a"] = "g^w transcendental";
  }
}

void su_trial(const CampaignConfig& config, Rng& rng, TrialOutcome& out) {
  const std::size_t n = ring_size(config, rng, 2, 3);
  const std::uint32_t deg = degree_bound(config, 6);
  const WeightVector w = random_weights(rng, n, WeightKind::kPositive);
  const Instance in = rng.chance(3, 4) ? planted_instance(rng, n, 1, deg, w, rng.coin())
                                       : random_instance(rng, n, 1, deg);
  out.evidence["input"] = instance_json(in, w);
  cross_check_m(out, substitute_coefficients(in.phi_z, in.fs), in.g, w);
  const IneqReport report = check_lcm_bound(in.fs[0], in.phi_z, in.g, w);
  out.evidence["su"] = to_json(report);
  settle(out, report.verdict(), "lcm bound");
}

DiffForm random_one_form(Rng& rng, std::size_t n) {
  DiffForm eta(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.coin()) continue;
    eta.add_term(DiffForm::IndexSet{1} << i, random_polynomial(rng, shape_of(n, 2, 2)));
  }
  return eta;
}

void twomax_trial(const CampaignConfig& config, Rng& rng, TrialOutcome& out) {
  std::size_t l = 0, n = 0;
  if (config.n) {
    n = *config.n;
    l = pick(rng, 2, std::min<std::size_t>(5, n + 1));
  } else {
    l = pick(rng, 2, 5);
    n = pick(rng, std::max<std::size_t>(1, l - 1), 4);
  }
  const std::uint32_t deg = degree_bound(config, 3);
  const std::int64_t roll = rng.uniform(0, 4);
  const WeightKind kind = roll < 3 ? WeightKind::kMixed
                        : roll < 4 ? WeightKind::kNonnegative
                                   : WeightKind::kLex;
  const WeightVector w = random_weights(rng, n, kind);
  std::vector<DiffForm> etas;
  Json described = Json::array();
  for (std::size_t i = 0; i < l; ++i) {
    const std::int64_t mode = rng.uniform(0, 4);
    if (mode <= 1) {
      const Polynomial f = random_nonzero_polynomial(rng, shape_of(n, deg, 3));
      etas.push_back(differential(f));
      described.push_back("d(" + f.str() + ")");
    } else if (mode <= 3 || i == 0) {
      etas.push_back(random_one_form(rng, n));
      described.push_back("random 1-form");
    } else {
      // A combination of earlier forms, so the tuple is dependent.
      const std::size_t j = pick(rng, 0, i - 1);
      const std::size_t k = pick(rng, 0, i - 1);
      const Polynomial h = random_polynomial(rng, shape_of(n, 1, 2));
      etas.push_back(etas[j] * Polynomial::constant(n, rng.nonzero(-2, 2)) + etas[k] * h);
      described.push_back("combination of eta" + std::to_string(j + 1) + ", eta" +
                          std::to_string(k + 1));
    }
  }
  Json input;
  input["l"] = l;
  input["n"] = n;
  input["w"] = weights_json(w);
  input["etas"] = std::move(described);
  out.evidence["input"] = std::move(input);
  const TwoMaxResult res = two_max_check(etas, w);
  Json values = Json::array();
  for (const Degree& d : res.values) values.push_back(to_json(d));
  out.evidence["values"] = std::move(values);
  out.evidence["witnesses"] = {res.first + 1, res.second + 1};
  out.evidence["holds"] = res.holds;
  settle(out, res.holds, "two-maxima property");
  cross_check_random_m(out, rng, n);
}

bool constant_nonzero(const Polynomial& p) { return p.is_constant() && !p.is_zero(); }

void jung_trial(const CampaignConfig& config, Rng& rng, TrialOutcome& out) {
  const std::size_t steps = pick(rng, 0, 6);
  const std::uint32_t deg = degree_bound(config, 3);
  const std::uint64_t map_seed = rng.next();
  const PolyMap sigma = random_tame(2, steps, deg, 3, map_seed);
  const Polynomial jac = jacobian_det(sigma);
  const DegreeDivisibility dd = check_degree_divisibility(sigma);
  Json input;
  input["steps"] = steps;
  input["map_seed"] = map_seed;
  input["images"] = polys_json(sigma.images());
  out.evidence["input"] = std::move(input);
  out.evidence["jacobian"] = jac.str();
  out.evidence["degrees"] = {dd.d1, dd.d2};
  out.evidence["divisible"] = dd.divisible;
  settle(out, constant_nonzero(jac), "constant Jacobian");
  settle(out, dd.divisible, "degree divisibility");
  cross_check_random_m(out, rng, 2);
}

// Initials dependent, with an independent (n-1)-subset.
bool transcendence_degree_n_minus_1(std::span<const Polynomial> initials) {
  if (algebraically_independent(initials)) return false;
  const std::size_t n = initials.size();
  for (std::size_t skip = n; skip-- > 0;) {
    std::vector<Polynomial> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != skip) sub.push_back(initials[i]);
    }
    if (algebraically_independent(sub)) return true;
  }
  return false;
}

void t43_trial(const CampaignConfig& config, Rng& rng, TrialOutcome& out) {
  const std::size_t n = ring_size(config, rng, 2, 3);
  const std::size_t steps = pick(rng, 1, 4);
  const std::uint32_t deg = degree_bound(config, 2);
  const std::uint64_t map_seed = rng.next();
  const PolyMap sigma = random_tame(n, steps, deg, 2, map_seed, n == 2 ? 16 : 10);
  Json input;
  input["steps"] = steps;
  input["map_seed"] = map_seed;
  input["images"] = polys_json(sigma.images());

  std::optional<WeightVector> chosen;
  for (int attempt = 0; attempt < 8 && !chosen; ++attempt) {
    const WeightVector w = attempt == 0 ? WeightVector::uniform(n)
                                        : random_weights(rng, n, WeightKind::kNonnegative);
    std::vector<Polynomial> initials;
    for (const Polynomial& f : sigma.images()) initials.push_back(initial_form(f, w));
    if (transcendence_degree_n_minus_1(initials)) chosen = w;
  }
  cross_check_random_m(out, rng, n);
  if (!chosen) {
    out.evidence["input"] = std::move(input);
    throw InputError("no weight found with dependent initials of transcendence degree n-1");
  }
  input["w"] = weights_json(*chosen);
  out.evidence["input"] = std::move(input);

  const PolyMap inv = sigma.inverse();
  const IneqReport report = check_automorphism_bound(sigma.images(), *chosen, inv.images());
  out.evidence["t43"] = to_json(report);
  settle(out, report.verdict(), "automorphism degree bound");
  if (n == 2) {
    const PlaneBoundResult plane = check_plane_bound(sigma[0], sigma[1], *chosen);
    out.evidence["cor44"] = to_json(plane);
    settle(out, plane.applicable && plane.verdict(), "plane bound");
  }
}

using SuiteFn = std::function<void(const CampaignConfig&, Rng&, TrialOutcome&)>;

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table = {
      {"main", main_trial}, {"t34", t34_trial},   {"su", su_trial},
      {"twomax", twomax_trial}, {"jung", jung_trial}, {"t43", t43_trial},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& campaign_suites() {
  static const std::vector<std::string> names = {"main", "t34", "su", "twomax", "jung", "t43"};
  return names;
}

TrialOutcome run_trial(const CampaignConfig& config, std::uint64_t trial_seed) {
  const auto it = suite_table().find(config.suite);
  if (it == suite_table().end()) throw InputError("unknown suite '" + config.suite + "'");
  Rng rng(trial_seed);
  TrialOutcome out;
  try {
    it->second(config, rng, out);
  } catch (const CapacityError& e) {
    if (out.status != TrialStatus::kFailed) {
      out.status = TrialStatus::kCapacity;
      out.message = e.what();
    }
  } catch (const InputError& e) {
    // A precondition the generator could not arrange; an earlier failure
    // (an m mismatch) still counts.
    if (out.status != TrialStatus::kFailed) {
      out.status = TrialStatus::kSkipped;
      out.message = e.what();
    }
  } catch (const std::exception& e) {
    out.status = TrialStatus::kFailed;
    out.message = std::string("exception: ") + e.what();
  }
  return out;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  if (!suite_table().contains(config.suite)) {
    throw InputError("unknown suite '" + config.suite + "'");
  }
  if (config.trials < 1) throw InputError("trials must be at least 1");
  if (config.n) {
    const std::size_t n = *config.n;
    const bool ok = config.suite == "jung"     ? n == 2
                    : config.suite == "twomax" ? n >= 1 && n <= 6
                                               : n >= 2 && n <= 4;
    if (!ok) throw InputError("--n " + std::to_string(n) + " is out of range for suite " + config.suite);
  }
  if (config.deg_bound && (*config.deg_bound < 1 || *config.deg_bound > 8)) {
    throw InputError("--deg-bound must be between 1 and 8");
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(config.trials);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= config.trials) return;
      outcomes[t] = run_trial(config, child_seed(config.seed, t));
      // Keep evidence only where the report shows it.
      if (config.trials > 1 && outcomes[t].status == TrialStatus::kPassed) {
        outcomes[t].evidence = Json::object();
      }
    }
  };
  std::size_t jobs = config.jobs ? config.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<std::size_t>(std::min<std::uint64_t>(jobs, config.trials));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }

  CampaignResult result;
  result.config = config;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    TrialOutcome& o = outcomes[t];
    result.m_checks += o.m_checks;
    result.m_mismatches += o.m_mismatches;
    Json entry;
    entry["trial"] = t;
    entry["seed"] = child_seed(config.seed, t);
    entry["message"] = o.message;
    switch (o.status) {
      case TrialStatus::kPassed: ++result.passed; break;
      case TrialStatus::kSkipped:
        ++result.skipped;
        ++result.skip_reasons[o.message];
        break;
      case TrialStatus::kFailed:
        ++result.failed;
        entry["evidence"] = o.evidence;
        result.failures.push_back(std::move(entry));
        break;
      case TrialStatus::kCapacity:
        ++result.capacity_errors;
        result.capacity.push_back(std::move(entry));
        break;
    }
    if (config.trials == 1) {
      Json record = std::move(o.evidence);
      record["status"] = o.status == TrialStatus::kPassed    ? "passed"
                         : o.status == TrialStatus::kFailed  ? "failed"
                         : o.status == TrialStatus::kSkipped ? "skipped"
                                                             : "capacity";
      if (!o.message.empty()) record["message"] = o.message;
      result.record = std::move(record);
    }
  }
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Json CampaignResult::to_json(bool with_wall_time) const {
  Json out;
  out["command"] = "campaign";
  out["version"] = kVersion;
  out["suite"] = config.suite;
  out["trials"] = config.trials;
  out["seed"] = config.seed;
  out["seed_derivation"] = "splitmix64 of (seed, trial index)";
  Json shape = Json::object();
  shape["n"] = config.n ? Json(*config.n) : Json(nullptr);
  shape["deg_bound"] = config.deg_bound ? Json(*config.deg_bound) : Json(nullptr);
  out["shape"] = std::move(shape);
  out["passed"] = passed;
  out["failed"] = failed;
  out["skipped"] = skipped;
  out["capacity_errors"] = capacity_errors;
  Json reasons = Json::object();
  for (const auto& [why, count] : skip_reasons) reasons[why] = count;
  out["skip_reasons"] = std::move(reasons);
  out["m_checks"] = m_checks;
  out["m_mismatches"] = m_mismatches;
  out["failures"] = failures;
  out["capacity"] = capacity;
  if (record) out["record"] = *record;
  out["ok"] = ok();
  if (with_wall_time) out["wall_time"] = wall_time;
  return out;
}

}  // namespace wdeg
