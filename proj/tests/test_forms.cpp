#include <gtest/gtest.h>

#include "helpers.hpp"
#include "wdeg/errors.hpp"
#include "wdeg/forms.hpp"

using namespace testing_helpers;

namespace {

constexpr int kTrials = 250;

DiffForm dx(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<std::size_t> v(idx);
  return DiffForm::basis(n, v);
}

TEST(Differential, Examples) {
  const DiffForm d = differential(P("x1*x3 + x2^2", 3));
  EXPECT_EQ(d.coefficient(std::vector<std::size_t>{0}), P("x3", 3));
  EXPECT_EQ(d.coefficient(std::vector<std::size_t>{1}), P("2*x2", 3));
  EXPECT_EQ(d.coefficient(std::vector<std::size_t>{2}), P("x1", 3));
  EXPECT_TRUE(differential(P("5", 2)).is_zero());
  EXPECT_EQ(differential(P("x1^2", 2)), dx(2, {0}) * P("2*x1", 2));
}

TEST(Wedge, Examples) {
  EXPECT_TRUE(wedge(dx(2, {0}), dx(2, {0})).is_zero());
  const DiffForm a = dx(2, {0}) * P("2*x1", 2);
  const DiffForm b = dx(2, {0}) * P("3*x1^2", 2) + dx(2, {1});
  EXPECT_EQ(wedge(a, b), dx(2, {0, 1}) * P("2*x1", 2));
  EXPECT_EQ(wedge(dx(2, {1}), dx(2, {0})), dx(2, {0, 1}) * P("-1", 2));
  EXPECT_THROW(wedge(dx(2, {0, 1}), dx(2, {0})), InputError);
}

TEST(FormDegree, Examples) {
  EXPECT_EQ(form_degree(dx(2, {0, 1}) * P("2*x1", 2), {1, 1}), D(3));
  EXPECT_EQ(form_degree(differential(P("x1*x3 + x2^2", 3)), {1, 1, 1}), D(2));
  EXPECT_EQ(form_degree(DiffForm(2, 1), {1, 1}), NegInf());
}

TEST(AlgebraicIndependence, Examples) {
  EXPECT_TRUE(algebraically_independent(Ps({"x1", "x2"}, 2)));
  EXPECT_FALSE(algebraically_independent(Ps({"x1^2", "x1^3"}, 2)));
  EXPECT_FALSE(algebraically_independent(Ps({"x1", "x2", "x1*x2"}, 2)));
}

TEST(TwoMax, Examples) {
  {
    std::vector<DiffForm> etas;
    for (const Polynomial& f : Ps({"x1", "x2", "x1*x2"}, 2)) etas.push_back(differential(f));
    const TwoMaxResult r = two_max_check(etas, {1, 1});
    EXPECT_EQ(r.values, (std::vector<Degree>{D(4), D(4), D(4)}));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.first, 0u);
    EXPECT_EQ(r.second, 1u);
  }
  {
    const std::vector<DiffForm> etas{dx(2, {0}), dx(2, {1})};
    const TwoMaxResult r = two_max_check(etas, {1, 1});
    EXPECT_EQ(r.values, (std::vector<Degree>{D(2), D(2)}));
    EXPECT_TRUE(r.holds);
  }
  {
    std::vector<DiffForm> etas;
    for (const Polynomial& f : Ps({"x1", "x2", "x3"}, 3)) etas.push_back(differential(f));
    EXPECT_EQ(two_max_check(etas, {1, 1, 1}).values, (std::vector<Degree>{D(3), D(3), D(3)}));
  }
  const std::vector<DiffForm> too_many{dx(1, {0}), dx(1, {0}), dx(1, {0})};
  EXPECT_THROW(two_max_check(too_many, {1}), InputError);
}

class FormsProperty : public ::testing::Test {
 protected:
  Rng rng{77};
  Polynomial poly(std::size_t n, std::uint32_t deg = 3) {
    return random_nonzero_polynomial(rng, shape(n, deg, 3));
  }
  DiffForm one_form(std::size_t n) {
    DiffForm eta(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.coin()) eta.add_term(DiffForm::IndexSet{1} << i, random_polynomial(rng, shape(n, 2, 2)));
    }
    return eta;
  }
  DiffForm form(std::size_t n, std::size_t grade) {
    DiffForm out = DiffForm::scalar(Polynomial::constant(n, 1));
    for (std::size_t i = 0; i < grade; ++i) out = wedge(out, one_form(n));
    return out;
  }
  WeightVector weights(std::size_t n, int t) {
    return t % 4 == 0 ? lex_weights(rng, n) : as_weights(random_int_weights(rng, n, -2, 3));
  }
};

// deg df = deg f needs f^w nonconstant: for f = 1 + x1 and w = (-1) the
// constant term carries the degree (0) while df = dx1 has degree -1.
TEST_F(FormsProperty, DifferentialPreservesDegree) {
  int checked = 0;
  for (int t = 0; t < kTrials * 2; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const WeightVector w = weights(n, t);
    const Polynomial f = poly(n);
    if (initial_form(f, w).is_constant()) continue;
    ++checked;
    EXPECT_EQ(form_degree(differential(f), w), weighted_degree(f, w)) << f.str() << " " << w.str();
  }
  EXPECT_GE(checked, 200);
}

TEST(FormsCaveat, ConstantInitialFormBreaksDegreeEquality) {
  const Polynomial f = P("1 + x1", 1);
  EXPECT_EQ(weighted_degree(f, {-1}), D(0));
  EXPECT_EQ(form_degree(differential(f), {-1}), D(-1));
}

TEST_F(FormsProperty, WedgeSubadditiveAndScalarMultiplicative) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const WeightVector w = weights(n, t);
    const std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    const std::size_t s = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n - r)));
    const DiffForm a = form(n, r), b = form(n, s);
    EXPECT_LE(form_degree(wedge(a, b), w), form_degree(a, w) + form_degree(b, w));
    const Polynomial f = poly(n);
    EXPECT_EQ(form_degree(a * f, w), weighted_degree(f, w) + form_degree(a, w));
    const DiffForm c = form(n, r);
    EXPECT_LE(form_degree(a + c, w), max(form_degree(a, w), form_degree(c, w)));
  }
}

TEST_F(FormsProperty, WedgeAssociativeAndGradedAnticommutative) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(3, 4));
    const DiffForm a = form(n, 1), b = form(n, 1), c = form(n, 1);
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    EXPECT_EQ(wedge(a, b), wedge(b, a) * Polynomial::constant(n, -1));
    const DiffForm ab = wedge(a, b);
    EXPECT_EQ(wedge(ab, c), wedge(c, ab));  // (-1)^(2*1) = +1
  }
}

TEST_F(FormsProperty, IndependenceMatchesJacobianRank) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const std::size_t s = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n)));
    std::vector<Polynomial> hs;
    for (std::size_t i = 0; i < s; ++i) {
      // Sometimes a function of the earlier ones, so dependence occurs.
      if (i > 0 && rng.chance(1, 3)) {
        hs.push_back(hs[0] * hs[i - 1] + Polynomial::constant(n, rng.uniform(-2, 2)));
      } else {
        hs.push_back(poly(n, 2));
      }
    }
    std::vector<oracle::OPoly> os;
    for (const Polynomial& h : hs) os.push_back(oracle::from_library(h));
    EXPECT_EQ(algebraically_independent(hs), oracle::independent_by_rank(os));
  }
}

TEST_F(FormsProperty, TwoMaximaAttainedTwice) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t l = static_cast<std::size_t>(rng.uniform(2, 5));
    const std::size_t n = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(l) - 1, 4));
    const WeightVector w = weights(n, t);
    std::vector<DiffForm> etas;
    for (std::size_t i = 0; i < l; ++i) etas.push_back(rng.coin() ? differential(poly(n)) : one_form(n));
    const TwoMaxResult r = two_max_check(etas, w);
    EXPECT_TRUE(r.holds);
    EXPECT_LT(r.first, r.second);
    EXPECT_EQ(r.values[r.first], r.values[r.second]);
  }
}

}  // namespace
