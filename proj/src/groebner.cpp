#include "wdeg/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "wdeg/errors.hpp"
#include "wdeg/forms.hpp"

namespace wdeg {

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) noexcept {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::kGrevlex:
      return grevlex_range(a, b, 0, n);
    case Kind::kLex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case Kind::kElimination: {
      const std::size_t cut = std::min(block_, n);
      const int c = grevlex_range(a, b, 0, cut);
      return c != 0 ? c : grevlex_range(a, b, cut, n);
    }
  }
  return 0;
}

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators)
    : nvars_(nvars) {
  for (Polynomial& g : generators) {
    if (g.nvars() != nvars_) throw InputError("ideal generator in the wrong ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

namespace {

// Polynomial with terms sorted descending under the engine's order.
struct OrderedPoly {
  std::vector<Term> terms;
  std::uint64_t sugar = 0;
  std::uint32_t lead_mask = 0;

  bool is_zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().mono; }
};

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) mask |= 1U << i;
  }
  return mask;
}

class Engine {
 public:
  Engine(std::size_t nvars, const MonomialOrder& order,
         const GroebnerOptions& options)
      : n_(nvars), order_(order), options_(options) {}

  OrderedPoly convert(const Polynomial& p) const {
    OrderedPoly out;
    out.terms.assign(p.terms().begin(), p.terms().end());
    std::sort(out.terms.begin(), out.terms.end(),
              [this](const Term& a, const Term& b) {
                return order_.compare(a.mono, b.mono) > 0;
              });
    out.sugar = p.is_zero() ? 0 : static_cast<std::uint64_t>(p.total_degree());
    finish(out);
    return out;
  }

  static Polynomial to_polynomial(std::size_t n, const OrderedPoly& p) {
    return Polynomial(n, p.terms);
  }

  // Makes monic and refreshes the lead mask.
  static void finish(OrderedPoly& p) {
    if (p.terms.empty()) return;
    if (p.terms.front().coef != 1) {
      const Rational inv = 1 / p.terms.front().coef;
      for (Term& t : p.terms) t.coef *= inv;
    }
    p.lead_mask = support_mask(p.lm());
  }

  // cur[from:] - c * m * r (r monic), merged under the order.
  std::vector<Term> subtract_multiple(const std::vector<Term>& cur,
                                      std::size_t from, const Rational& c,
                                      const Monomial& m,
                                      const OrderedPoly& r) const {
    std::vector<Term> out;
    out.reserve(cur.size() - from + r.terms.size());
    std::size_t i = from, j = 1;  // r's leading term cancels by construction
    while (i < cur.size() && j < r.terms.size()) {
      Monomial rm = r.terms[j].mono * m;
      const int cmp = order_.compare(cur[i].mono, rm);
      if (cmp > 0) {
        out.push_back(cur[i++]);
      } else if (cmp < 0) {
        out.push_back({rm, -c * r.terms[j].coef});
        ++j;
      } else {
        Rational s = cur[i].coef - c * r.terms[j].coef;
        if (s != 0) out.push_back({std::move(rm), std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < cur.size(); ++i) out.push_back(cur[i]);
    for (; j < r.terms.size(); ++j) {
      out.push_back({r.terms[j].mono * m, -c * r.terms[j].coef});
    }
    return out;
  }

  // Index of a reducer whose leading monomial divides t, or npos.
  std::size_t find_reducer(const Monomial& t,
                           std::span<const std::size_t> reducers) const {
    const std::uint32_t tmask = support_mask(t);
    for (std::size_t idx : reducers) {
      const OrderedPoly& r = polys_[idx];
      if ((r.lead_mask & ~tmask) != 0) continue;
      if (r.lm().divides(t)) return idx;
    }
    return npos;
  }

  // Full reduction of h modulo the listed polynomials.
  OrderedPoly reduce(OrderedPoly h, std::span<const std::size_t> reducers) {
    OrderedPoly out;
    out.sugar = h.sugar;
    std::vector<Term> cur = std::move(h.terms);
    std::size_t pos = 0;
    while (pos < cur.size()) {
      const std::size_t idx = find_reducer(cur[pos].mono, reducers);
      if (idx == npos) {
        out.terms.push_back(std::move(cur[pos]));
        ++pos;
        continue;
      }
      const OrderedPoly& r = polys_[idx];
      const Monomial m = cur[pos].mono / r.lm();
      const Rational c = cur[pos].coef;  // r is monic
      out.sugar = std::max(out.sugar, r.sugar + m.total_degree());
      cur = subtract_multiple(cur, pos + 1, c, m, r);
      pos = 0;
      if (++steps_ > options_.max_steps) {
        throw CapacityError("Groebner basis computation exceeded its step budget");
      }
    }
    finish(out);
    return out;
  }

  std::size_t add(OrderedPoly p) {
    polys_.push_back(std::move(p));
    active_.push_back(false);
    return polys_.size() - 1;
  }

  std::vector<std::size_t> active_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (active_[i]) out.push_back(i);
    }
    return out;
  }

  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint64_t sugar;
  };

  Pair make_pair(std::size_t i, std::size_t j) const {
    const OrderedPoly& a = polys_[i];
    const OrderedPoly& b = polys_[j];
    Monomial l = a.lm().lcm(b.lm());
    const std::uint64_t dl = l.total_degree();
    const std::uint64_t s = std::max(a.sugar + dl - a.lm().total_degree(),
                                     b.sugar + dl - b.lm().total_degree());
    return {i, j, l, s};
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].lm();
    struct Cand {
      Pair pair;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (!active_[g]) continue;
      c.push_back({make_pair(g, h), polys_[g].lm().coprime(lh)});
    }
    std::vector<Cand> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q) {
          if (c[q].pair.lcm.divides(c[k].pair.lcm)) keep = false;
        }
        for (std::size_t q = 0; q < d.size() && keep; ++q) {
          if (d[q].pair.lcm.divides(c[k].pair.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (Pair& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        !(polys_[p.i].lm().lcm(lh) == p.lcm) &&
                        !(polys_[p.j].lm().lcm(lh) == p.lcm);
      if (!drop) kept.push_back(std::move(p));
    }
    for (Cand& e : d) {
      if (!e.coprime) kept.push_back(std::move(e.pair));
    }
    pairs_ = std::move(kept);
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g] && lh.divides(polys_[g].lm())) active_[g] = false;
    }
    active_[h] = true;
  }

  OrderedPoly s_polynomial(const Pair& p) const {
    const OrderedPoly& a = polys_[p.i];
    const OrderedPoly& b = polys_[p.j];
    const Monomial ma = p.lcm / a.lm();
    const Monomial mb = p.lcm / b.lm();
    std::vector<Term> scaled_a;
    scaled_a.reserve(a.terms.size());
    for (std::size_t k = 1; k < a.terms.size(); ++k) {
      scaled_a.push_back({a.terms[k].mono * ma, a.terms[k].coef});
    }
    OrderedPoly out;
    out.terms = subtract_multiple(scaled_a, 0, Rational(1), mb, b);
    out.sugar = p.sugar;
    return out;
  }

  std::vector<OrderedPoly> run(std::span<const Polynomial> generators) {
    for (const Polynomial& g : generators) {
      OrderedPoly p = convert(g);
      if (p.is_zero()) continue;
      const auto reducers = active_indices();
      p = reduce(std::move(p), reducers);
      if (p.is_zero()) continue;
      update(add(std::move(p)));
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(
          pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            return order_.compare(a.lcm, b.lcm) < 0;
          });
      const Pair p = *best;
      *best = std::move(pairs_.back());
      pairs_.pop_back();
      const auto reducers = active_indices();
      OrderedPoly h = reduce(s_polynomial(p), reducers);
      if (h.is_zero()) continue;
      update(add(std::move(h)));
    }
    return interreduce();
  }

  std::vector<OrderedPoly> interreduce() {
    std::vector<std::size_t> basis = active_indices();
    // Active elements already have pairwise non-dividing leading monomials.
    std::vector<OrderedPoly> out;
    for (std::size_t idx : basis) {
      std::vector<std::size_t> others;
      for (std::size_t o : basis) {
        if (o != idx) others.push_back(o);
      }
      const OrderedPoly& p = polys_[idx];
      OrderedPoly full;
      full.sugar = p.sugar;
      full.terms.push_back(p.terms.front());
      OrderedPoly tail = reduce_raw(p, others);
      full.terms.insert(full.terms.end(), tail.terms.begin(), tail.terms.end());
      finish(full);
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(),
              [this](const OrderedPoly& a, const OrderedPoly& b) {
                return order_.compare(a.lm(), b.lm()) > 0;
              });
    return out;
  }

  // Reduces the tail of p (everything after its leading term) without
  // normalizing the result.
  OrderedPoly reduce_raw(const OrderedPoly& p,
                         std::span<const std::size_t> reducers) {
    OrderedPoly out;
    std::vector<Term> cur(p.terms.begin() + 1, p.terms.end());
    std::size_t pos = 0;
    while (pos < cur.size()) {
      const std::size_t idx = find_reducer(cur[pos].mono, reducers);
      if (idx == npos) {
        out.terms.push_back(std::move(cur[pos]));
        ++pos;
        continue;
      }
      const OrderedPoly& r = polys_[idx];
      const Monomial m = cur[pos].mono / r.lm();
      const Rational c = cur[pos].coef;
      cur = subtract_multiple(cur, pos + 1, c, m, r);
      pos = 0;
      if (++steps_ > options_.max_steps) {
        throw CapacityError("Groebner basis computation exceeded its step budget");
      }
    }
    return out;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t n_;
  MonomialOrder order_;
  GroebnerOptions options_;
  std::vector<OrderedPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::uint64_t steps_ = 0;
};

bool is_interreduced(const Ideal& basis, const MonomialOrder& order) {
  const auto gens = basis.generators();
  std::vector<Monomial> leads;
  for (const Polynomial& g : gens) leads.push_back(leading_term(g, order).mono);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : gens[j].terms()) {
        if (leads[i].divides(t.mono)) return false;
      }
    }
  }
  return true;
}

}  // namespace

const Term& leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw InputError("zero polynomial has no leading term");
  const auto terms = f.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (order.compare(terms[i].mono, terms[best].mono) > 0) best = i;
  }
  return terms[best];
}

Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                     const GroebnerOptions& options) {
  Engine engine(ideal.nvars(), order, options);
  std::vector<OrderedPoly> basis = engine.run(ideal.generators());
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const OrderedPoly& p : basis) {
    out.push_back(Engine::to_polynomial(ideal.nvars(), p));
  }
  return Ideal(ideal.nvars(), std::move(out));
}

Polynomial normal_form(const Polynomial& f, const Ideal& basis,
                       const MonomialOrder& order) {
  if (f.nvars() != basis.nvars()) throw InputError("normal form across rings");
  if (!is_interreduced(basis, order)) {
    throw InputError("normal form needs an interreduced Groebner basis");
  }
  if (f.is_zero()) return f;
  // Reduction by the basis with the same engine, without rescaling f.
  std::vector<Term> rem;
  Polynomial cur = f;
  const auto gens = basis.generators();
  std::vector<std::pair<Term, const Polynomial*>> leads;
  for (const Polynomial& g : gens) leads.push_back({leading_term(g, order), &g});
  while (!cur.is_zero()) {
    const Term top = leading_term(cur, order);
    const Polynomial* divisor = nullptr;
    const Term* lead = nullptr;
    for (const auto& [lt, g] : leads) {
      if (lt.mono.divides(top.mono)) {
        divisor = g;
        lead = &lt;
        break;
      }
    }
    if (!divisor) {
      rem.push_back(top);
      cur -= Polynomial::monomial(top.mono, top.coef);
      continue;
    }
    cur -= *divisor *
           Polynomial::monomial(top.mono / lead->mono, top.coef / lead->coef);
  }
  return Polynomial(f.nvars(), std::move(rem));
}

Ideal map_kernel(std::span<const Polynomial> images,
                 const GroebnerOptions& options) {
  if (images.empty()) throw InputError("map kernel needs at least one image");
  const std::size_t n = images[0].nvars();
  const std::size_t m = images.size();
  if (n + m > Monomial::kMaxVars) {
    throw InputError("elimination ring would need " + std::to_string(n + m) +
                     " variables (limit " + std::to_string(Monomial::kMaxVars) + ")");
  }
  for (const Polynomial& h : images) {
    if (h.nvars() != n) throw InputError("map images live in different rings");
    if (h.is_zero()) throw InputError("map kernel needs nonzero images");
  }
  const std::size_t total = n + m;
  std::vector<std::size_t> xs(n);
  std::iota(xs.begin(), xs.end(), 0);
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < m; ++j) {
    gens.push_back(Polynomial::variable(total, n + j) -
                   rename_vars(images[j], total, xs));
  }
  const Ideal basis = groebner_basis(Ideal(total, std::move(gens)),
                                     MonomialOrder::elimination(n), options);
  std::vector<std::size_t> back(total, 0);
  for (std::size_t j = 0; j < m; ++j) back[n + j] = j;
  std::vector<Polynomial> kernel;
  for (const Polynomial& g : basis.generators()) {
    bool eliminated = true;
    for (std::size_t i = 0; i < n && eliminated; ++i) {
      if (g.involves(i)) eliminated = false;
    }
    if (eliminated) kernel.push_back(rename_vars(g, m, back));
  }
  return Ideal(m, std::move(kernel));
}

Polynomial principal_generator(const Ideal& ideal,
                               const GroebnerOptions& options) {
  if (ideal.is_zero()) throw InputError("the zero ideal has no generator");
  const MonomialOrder order = MonomialOrder::grevlex();
  const Ideal basis = groebner_basis(ideal, order, options);
  const auto gens = basis.generators();
  std::size_t best = 0;
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (gens[i].total_degree() < gens[best].total_degree()) best = i;
  }
  const Polynomial& candidate = gens[best];
  for (const Polynomial& g : gens) {
    if (!exact_quotient(g, candidate)) {
      throw InputError("ideal is not principal: " + g.str() +
                       " is not a multiple of " + candidate.str());
    }
  }
  return candidate.divided_by(leading_term(candidate, order).coef);
}

Annihilator min_annihilating(std::span<const Polynomial> hs,
                             const Polynomial& s,
                             const GroebnerOptions& options) {
  if (hs.empty()) throw InputError("annihilator needs at least one h");
  if (s.is_zero()) throw InputError("annihilator of 0 requested");
  if (!algebraically_independent(hs)) {
    throw InputError("annihilator needs algebraically independent h's");
  }
  std::vector<Polynomial> images(hs.begin(), hs.end());
  images.push_back(s);
  Annihilator out;
  if (algebraically_independent(images)) return out;
  const Polynomial q = principal_generator(map_kernel(images, options), options);
  out.exists = true;
  out.polynomial = UPoly::from_polynomial(q, hs.size());
  out.degree = static_cast<std::uint32_t>(out.polynomial.degree());
  return out;
}

SubalgebraMembership::SubalgebraMembership(
    std::span<const Polynomial> generators, const GroebnerOptions& options)
    : n_(generators.empty() ? 0 : generators[0].nvars()),
      m_(generators.size()),
      basis_(0) {
  if (generators.empty()) throw InputError("subalgebra needs generators");
  if (n_ + m_ > Monomial::kMaxVars) {
    throw InputError("subalgebra membership ring too large");
  }
  const std::size_t total = n_ + m_;
  std::vector<std::size_t> xs(n_);
  std::iota(xs.begin(), xs.end(), 0);
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < m_; ++j) {
    if (generators[j].nvars() != n_) {
      throw InputError("subalgebra generators live in different rings");
    }
    gens.push_back(Polynomial::variable(total, n_ + j) -
                   rename_vars(generators[j], total, xs));
  }
  basis_ = groebner_basis(Ideal(total, std::move(gens)),
                          MonomialOrder::elimination(n_), options);
}

std::optional<Polynomial> SubalgebraMembership::express(const Polynomial& p) const {
  if (p.nvars() != n_) throw InputError("membership query in the wrong ring");
  const std::size_t total = n_ + m_;
  std::vector<std::size_t> xs(n_);
  std::iota(xs.begin(), xs.end(), 0);
  const Polynomial nf = normal_form(rename_vars(p, total, xs), basis_,
                                    MonomialOrder::elimination(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    if (nf.involves(i)) return std::nullopt;
  }
  std::vector<std::size_t> back(total, 0);
  for (std::size_t j = 0; j < m_; ++j) back[n_ + j] = j;
  return rename_vars(nf, m_, back);
}

bool SubalgebraMembership::contains(const Polynomial& p) const {
  return express(p).has_value();
}

}  // namespace wdeg
