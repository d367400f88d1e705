#include <gtest/gtest.h>

#include "helpers.hpp"
#include "wdeg/automorph.hpp"
#include "wdeg/errors.hpp"
#include "wdeg/forms.hpp"
#include "wdeg/ineq.hpp"

using namespace testing_helpers;

namespace {

std::int64_t integer(const IneqReport& r, std::string_view key) {
  const Quantity* q = r.find(key);
  if (q == nullptr) throw std::runtime_error("missing " + std::string(key));
  return std::get<std::int64_t>(*q);
}

Degree degree(const IneqReport& r, std::string_view key) {
  const Quantity* q = r.find(key);
  if (q == nullptr) throw std::runtime_error("missing " + std::string(key));
  return std::get<Degree>(*q);
}

void expect_sides(const IneqReport& r, Degree lhs, Degree rhs) {
  EXPECT_EQ(r.lhs, lhs) << r.name;
  EXPECT_EQ(r.rhs, rhs) << r.name;
  EXPECT_TRUE(r.holds) << r.name;
  EXPECT_TRUE(r.verdict()) << r.name;
}

std::vector<Polynomial> images(const PolyMap& m) { return {m.images().begin(), m.images().end()}; }

const WeightVector kOnes2{1, 1};

TEST(MainInequality, Examples) {
  const IneqReport a = check_main_inequality(Ps({"x1^2"}, 2), Z("y^2 - z1^3", 1), P("x1^3 + x2", 2), kOnes2);
  expect_sides(a, D(4), D(4));
  EXPECT_EQ(integer(a, "m"), 1);
  EXPECT_EQ(degree(a, "deg_wg_Phi"), D(6));
  EXPECT_EQ(degree(a, "M"), D(-2));
  EXPECT_FALSE(a.degenerate);

  const IneqReport b = check_main_inequality(Ps({"x1"}, 2), Z("y^2 + z1", 1), P("x2", 2), kOnes2);
  expect_sides(b, D(2), D(2));
  EXPECT_EQ(integer(b, "m"), 0);

  const IneqReport c = check_main_inequality(Ps({"x1", "x2"}, 2), Z("y", 2), P("x1 + x2", 2), kOnes2);
  expect_sides(c, D(1), D(1));
}

TEST(MainInequality, Errors) {
  EXPECT_THROW(check_main_inequality(Ps({"x1", "x1^2"}, 2), Z("y", 2), P("x2", 2), kOnes2), InputError);
  EXPECT_THROW(check_main_inequality(Ps({"x1"}, 2), UPoly(1), P("x2", 2), kOnes2), InputError);
  EXPECT_THROW(check_main_inequality(Ps({"x1"}, 2), Z("y", 1), Polynomial(2), kOnes2), InputError);
  EXPECT_THROW(check_main_inequality(Ps({"x1"}, 2), Z("y", 2), P("x2", 2), kOnes2), InputError);
}

TEST(DegreeQuotientBound, Examples) {
  const IneqReport a = check_degree_quotient_bound(Ps({"x1^2"}, 2), Z("y^2 - z1^3", 1), P("x1^3 + x2", 2), kOnes2);
  expect_sides(a, D(4), D(4));
  EXPECT_EQ(integer(a, "N"), 2);
  EXPECT_EQ(integer(a, "a"), 1);
  EXPECT_EQ(integer(a, "b"), 0);

  const IneqReport b = check_degree_quotient_bound(Ps({"x1"}, 2), Z("y", 1), P("x1", 2), kOnes2);
  expect_sides(b, D(1), NegInf());
  EXPECT_EQ(integer(b, "N"), 1);
  EXPECT_EQ(integer(b, "a"), 1);
  EXPECT_EQ(degree(b, "M"), NegInf());
  EXPECT_TRUE(b.degenerate);

  const IneqReport c = check_degree_quotient_bound(Ps({"x1"}, 2), Z("y^2", 1), P("x1", 2), kOnes2);
  expect_sides(c, D(2), NegInf());
}

TEST(DegreeQuotientBound, Errors) {
  // g^w = x2 is transcendental over k(x1).
  EXPECT_THROW(check_degree_quotient_bound(Ps({"x1"}, 2), Z("y^2 + z1", 1), P("x2", 2), kOnes2), InputError);
  // deg f < 0 and a negative weight: the nonnegativity hypothesis is not certified.
  EXPECT_THROW(check_degree_quotient_bound(Ps({"x1"}, 2), Z("y", 1), P("x1", 2), {-1, 1}), InputError);
}

TEST(AnnihilatorBound, Examples) {
  const IneqReport a = check_annihilator_bound(Ps({"x1^2"}, 2), Z("y^2 - z1^3", 1), P("x1^3 + x2", 2), kOnes2);
  expect_sides(a, D(4), D(4));
  EXPECT_EQ(degree(a, "deg_wg_P"), D(6));
  EXPECT_EQ(integer(a, "m"), 1);
  EXPECT_EQ(integer(a, "deg_y_P"), 2);

  const IneqReport b = check_annihilator_bound(Ps({"x1"}, 2), Z("y^2 + z1", 1), P("x2", 2), kOnes2);
  expect_sides(b, D(2), D(0));
  EXPECT_EQ(integer(b, "m"), 0);

  const IneqReport c = check_annihilator_bound(Ps({"x1"}, 2), Z("y", 1), P("x1", 2), kOnes2);
  expect_sides(c, D(1), D(0));
  EXPECT_EQ(degree(c, "deg_wg_P"), D(1));
  EXPECT_EQ(integer(c, "m"), 0);
  EXPECT_EQ(degree(c, "M"), NegInf());
}

TEST(AnnihilatorBound, Errors) {
  // Initial forms (x1, x1) are dependent.
  EXPECT_THROW(check_annihilator_bound(Ps({"x1", "x1 + x2"}, 2), Z("y", 2), P("x2", 2), {1, 0}), InputError);
  // deg g < 0.
  EXPECT_THROW(check_annihilator_bound(Ps({"x1"}, 2), Z("y", 1), P("x2", 2), {1, -1}), InputError);
}

TEST(LcmBound, Examples) {
  const IneqReport a = check_lcm_bound(P("x1^2", 2), Z("y^2 - z1^3", 1), P("x1^3 + x2", 2), kOnes2);
  expect_sides(a, D(4), D(4));
  EXPECT_EQ(integer(a, "N"), 2);
  EXPECT_EQ(integer(a, "a"), 1);
  EXPECT_EQ(integer(a, "b"), 0);
  EXPECT_EQ(integer(a, "lcm"), 6);

  const IneqReport b = check_lcm_bound(P("x1", 2), Z("y^2 + z1", 1), P("x2", 2), kOnes2);
  expect_sides(b, D(2), D(2));
  EXPECT_EQ(integer(b, "a"), 2);
  EXPECT_EQ(degree(b, "M"), D(0));

  const IneqReport c = check_lcm_bound(P("x1", 2), Z("y", 1), P("x2", 2), kOnes2);
  expect_sides(c, D(1), D(1));
}

TEST(LcmBound, Errors) {
  EXPECT_THROW(check_lcm_bound(P("x1", 2), Z("y", 1), P("x2", 2), {1, 0}), InputError);
  EXPECT_THROW(check_lcm_bound(P("3", 2), Z("y", 1), P("x2", 2), kOnes2), InputError);
  const WeightVector lex(std::vector<Gamma>{Gamma{1, 0}, Gamma{0, 1}});
  EXPECT_THROW(check_lcm_bound(P("x1", 2), Z("y", 1), P("x2", 2), lex), InputError);
}

TEST(Delta, Examples) {
  const DeltaData n = delta_invariant(images(nagata()), {1, 1, 1});
  EXPECT_EQ(n.q, P("x2^2 + x1*x3", 3));
  EXPECT_EQ(n.w_f, WeightVector({5, 3, 1}));
  EXPECT_EQ(n.delta, D(6));

  const DeltaData b = delta_invariant(Ps({"x1", "x2", "x3 + x1^2"}, 3), {1, 1, 1});
  EXPECT_TRUE(oracle::proportional(oracle::from_library(b.q), oracle::from_library(P("x3 - x1^2", 3))));
  EXPECT_EQ(b.w_f, WeightVector({1, 1, 2}));
  EXPECT_EQ(b.delta, D(2));

  const DeltaData c = delta_invariant(Ps({"x2", "x1 + x2^2"}, 2), kOnes2);
  EXPECT_TRUE(oracle::proportional(oracle::from_library(c.q), oracle::from_library(P("x2 - x1^2", 2))));
  EXPECT_EQ(c.delta, D(2));

  EXPECT_THROW(delta_invariant(Ps({"x1", "x2"}, 2), kOnes2), InputError);
  EXPECT_THROW(delta_invariant(Ps({"x1", "x1^2", "x1^3"}, 3), {1, 1, 1}), InputError);
}

TEST(AutomorphismBound, Examples) {
  const auto inv = images(nagata_inverse());
  const IneqReport a = check_automorphism_bound(images(nagata()), {1, 1, 1}, std::span<const Polynomial>(inv));
  expect_sides(a, D(9), D(8));
  EXPECT_EQ(degree(a, "delta"), D(6));
  EXPECT_GE(integer(a, "m"), 1);

  const IneqReport b = check_automorphism_bound(Ps({"x1", "x2", "x3 + x1^2"}, 3), {1, 1, 1});
  expect_sides(b, D(4), D(4));

  const IneqReport c = check_automorphism_bound(Ps({"x2", "x1 + x2^2"}, 2), kOnes2);
  expect_sides(c, D(3), D(3));
}

TEST(AutomorphismBound, Errors) {
  EXPECT_THROW(check_automorphism_bound(Ps({"x2", "x1 + x2^2"}, 2), {1, -1}), InputError);
  // Not an automorphism: Jacobian 2*x1 is not constant.
  EXPECT_THROW(check_automorphism_bound(Ps({"x1^2", "x2"}, 2), {1, 1}), InputError);
  // A wrong inverse is rejected.
  const auto bad = Ps({"x2", "x1"}, 2);
  EXPECT_THROW(check_automorphism_bound(Ps({"x2", "x1 + x2^2"}, 2), kOnes2, std::span<const Polynomial>(bad)),
               InputError);
}

TEST(PlaneBound, Examples) {
  auto run = [](const char* f1, const char* f2, const WeightVector& w, std::int64_t d1, std::int64_t d2,
                std::int64_t lcm, std::int64_t min_w) {
    const PlaneBoundResult r = check_plane_bound(P(f1, 2), P(f2, 2), w);
    ASSERT_TRUE(r.applicable);
    EXPECT_TRUE(r.divisibility);
    EXPECT_TRUE(r.verdict());
    EXPECT_EQ(r.report.lhs, D(d1 + d2));
    EXPECT_EQ(r.report.rhs, D(lcm + min_w));
    EXPECT_EQ(integer(r.report, "lcm"), lcm);
  };
  run("x2", "x1 + x2^2", kOnes2, 1, 2, 2, 1);
  run("x1", "x2 + x1^3", kOnes2, 1, 3, 3, 1);
  run("x1 + x2", "x2", {1, 2}, 2, 2, 2, 1);
  const PlaneBoundResult id = check_plane_bound(P("x1", 2), P("x2", 2), kOnes2);
  EXPECT_FALSE(id.applicable);
  EXPECT_TRUE(id.verdict());
}

class IneqProperty : public ::testing::Test {
 protected:
  Rng rng{31337};

  struct Instance {
    std::vector<Polynomial> fs;
    UPoly phi;
    Polynomial g;
  };

  // Half the instances plant Phi = (y - H(z)) R with g = H(f) + noise, so
  // that Phi(g) cancels and m >= 1.
  Instance draw(std::size_t n, std::size_t r, int t) {
    Instance in;
    for (std::size_t i = 0; i < r; ++i) in.fs.push_back(random_nonzero_polynomial(rng, shape(n, 2, 3)));
    in.phi = random_upoly(rng, r, 2, 2);
    if (t % 2 == 0) {
      const Polynomial h = random_nonzero_polynomial(rng, shape(r, 2, 2));
      in.g = substitute_vars(h, in.fs) + random_polynomial(rng, shape(n, 1, 2));
      const UPoly root(r, {-h, Polynomial::constant(r, 1)});
      in.phi = root * in.phi;
    } else {
      in.g = random_nonzero_polynomial(rng, shape(n, 3, 3));
    }
    return in;
  }

  static Degree oracle_lhs(const Instance& in, const std::vector<std::int64_t>& wi) {
    std::vector<oracle::OPoly> subs;
    for (const Polynomial& f : in.fs) subs.push_back(oracle::from_library(f));
    subs.push_back(oracle::from_library(in.g));
    const auto d = oracle::weighted_degree(oracle::from_library(in.phi.to_polynomial()).compose(subs), wi);
    return d ? D(*d) : NegInf();
  }
};

TEST_F(IneqProperty, MainInequalityHolds) {
  int checked = 0, cancelling = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto wi = random_int_weights(rng, n, -2, 3);
    const Instance in = draw(n, r, t);
    if (!algebraically_independent(in.fs) || in.g.is_zero()) continue;
    const IneqReport rep = check_main_inequality(in.fs, in.phi, in.g, as_weights(wi));
    ++checked;
    cancelling += integer(rep, "m") >= 1;
    EXPECT_TRUE(rep.verdict()) << in.phi.str() << " | " << in.g.str();
    EXPECT_EQ(rep.lhs, oracle_lhs(in, wi));
  }
  EXPECT_GE(checked, 200);
  EXPECT_GE(cancelling, 50);
}

TEST_F(IneqProperty, NonnegativeWeightBoundsHold) {
  int quotient = 0, annihilator = 0, lcm = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const std::size_t r = t % 3 == 0 ? 1 : static_cast<std::size_t>(rng.uniform(1, 2));
    const auto wi = random_int_weights(rng, n, t % 3 == 0 ? 1 : 0, 3);
    const WeightVector w = as_weights(wi);
    const Instance in = draw(n, r, t);
    if (!algebraically_independent(in.fs) || in.g.is_zero()) continue;
    try {
      const IneqReport a = check_degree_quotient_bound(in.fs, in.phi, in.g, w);
      EXPECT_TRUE(a.verdict()) << in.phi.str() << " | " << in.g.str() << " | " << w.str();
      EXPECT_EQ(integer(a, "a") * integer(a, "N") + integer(a, "b"), in.phi.degree());
      ++quotient;
    } catch (const InputError&) {
    }
    try {
      const IneqReport b = check_annihilator_bound(in.fs, in.phi, in.g, w);
      EXPECT_TRUE(b.verdict()) << in.phi.str() << " | " << in.g.str() << " | " << w.str();
      ++annihilator;
    } catch (const InputError&) {
    }
    if (r == 1) {
      try {
        const IneqReport c = check_lcm_bound(in.fs[0], in.phi, in.g, w);
        EXPECT_TRUE(c.verdict()) << in.phi.str() << " | " << in.g.str() << " | " << w.str();
        EXPECT_LE(degree(c, "M"), D(0));
        ++lcm;
      } catch (const InputError&) {
      }
    }
  }
  EXPECT_GE(quotient, 50);
  EXPECT_GE(annihilator, 100);
  EXPECT_GE(lcm, 30);
}

TEST_F(IneqProperty, TameAutomorphismBoundHolds) {
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 3));
    const PolyMap f = random_tame(n, static_cast<std::size_t>(rng.uniform(1, 3)), 2, 2, rng.next(), n == 2 ? 12 : 8);
    const WeightVector w = t % 2 ? WeightVector::uniform(n) : as_weights(random_int_weights(rng, n, 0, 2));
    const auto inv = images(f.inverse());
    try {
      const IneqReport r = check_automorphism_bound(images(f), w, std::span<const Polynomial>(inv));
      EXPECT_TRUE(r.verdict()) << f[0].str() << " | " << w.str();
      ++checked;
    } catch (const InputError&) {
      continue;
    }
    if (n == 2) {
      const PlaneBoundResult p = check_plane_bound(f[0], f[1], w);
      EXPECT_TRUE(p.applicable);
      EXPECT_TRUE(p.verdict());
    }
  }
  EXPECT_GE(checked, 20);
}

}  // namespace
