#include <gtest/gtest.h>

#include "helpers.hpp"
#include "wdeg/errors.hpp"

using namespace testing_helpers;

namespace {

constexpr int kTrials = 300;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-0/5")), "0");
  EXPECT_EQ(to_string(parse_rational("3/-6")), "-1/2");
  EXPECT_THROW(parse_rational("1/0"), InputError);
}

TEST(Gamma, LexOrderAndArithmetic) {
  EXPECT_LT((Gamma{0, 5}), (Gamma{1, -3}));
  EXPECT_EQ((Gamma{1, 2} + Gamma{-1, 3}), (Gamma{0, 5}));
  EXPECT_TRUE((Gamma{0, 1}).is_positive());
  EXPECT_FALSE((Gamma{-1, 9}).is_nonnegative());
  EXPECT_THROW((void)(Gamma{1, 2} + Gamma(3)), InputError);
}

TEST(Degree, MinusInfinityRules) {
  const Degree inf = NegInf();
  EXPECT_LT(inf, D(-1000));
  EXPECT_EQ(inf + D(5), inf);
  EXPECT_EQ(D(5) + inf, inf);
  EXPECT_EQ(inf, inf);
  EXPECT_EQ(inf.scaled(0), D(0));
  EXPECT_EQ(inf.scaled(3), inf);
  EXPECT_EQ(inf - D(2), inf);
  EXPECT_THROW((void)(D(2) - inf), InputError);
}

TEST(WeightedDegree, Examples) {
  EXPECT_EQ(weighted_degree(P("x1 + x2^2", 2), {2, 1}), D(2));
  EXPECT_EQ(weighted_degree(Polynomial(2), {1, 1}), NegInf());
  EXPECT_EQ(weighted_degree(P("x1*x3 + x2^2", 3), {1, 1, 1}), D(2));
  EXPECT_THROW(weighted_degree(P("x1", 2), {1, 1, 1}), InputError);
}

TEST(InitialForm, Examples) {
  EXPECT_EQ(initial_form(P("x1 + x2^2", 2), {1, 1}), P("x2^2", 2));
  EXPECT_EQ(initial_form(P("x1 + x2^2", 2), {2, 1}), P("x1 + x2^2", 2));
  // second Nagata component
  EXPECT_EQ(initial_form(P("x2 + (x1*x3 + x2^2)*x3", 3), {1, 1, 1}), P("(x1*x3 + x2^2)*x3", 3));
  EXPECT_THROW(initial_form(Polynomial(2), {1, 1}), InputError);
}

TEST(HomogeneousComponents, Examples) {
  auto c = homogeneous_components(P("x1 + x2^2", 2), {1, 1});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.at(Gamma(1)), P("x1", 2));
  EXPECT_EQ(c.at(Gamma(2)), P("x2^2", 2));
  EXPECT_TRUE(homogeneous_components(Polynomial(2), {1, 1}).empty());
  auto n = homogeneous_components(P("x1*x3 + x2^2 + x3", 3), {1, 1, 1});
  EXPECT_EQ(n.at(Gamma(1)), P("x3", 3));
  EXPECT_EQ(n.at(Gamma(2)), P("x1*x3 + x2^2", 3));
}

TEST(PartialDerivative, Examples) {
  const Polynomial f = P("x1*x3 + x2^2", 3);
  EXPECT_EQ(partial_derivative(f, 1), P("2*x2", 3));
  EXPECT_EQ(partial_derivative(f, 0), P("x3", 3));
  EXPECT_TRUE(partial_derivative(P("7", 3), 2).is_zero());
  EXPECT_THROW(partial_derivative(f, 3), InputError);
}

TEST(SubstituteVars, Examples) {
  const Polynomial f = P("x1*x3 + x2^2", 3);
  EXPECT_EQ(substitute_vars(f, Ps({"x1", "x2", "x3"}, 3)), f);
  EXPECT_TRUE(substitute_vars(P("x1^3 - x2^2", 2), Ps({"x1^2", "x1^3"}, 1)).is_zero());
  EXPECT_EQ(substitute_vars(P("x1 + x2", 2), Ps({"x2", "x1"}, 2)), P("x1 + x2", 2));
  EXPECT_THROW(substitute_vars(f, Ps({"x1", "x2"}, 2)), InputError);
}

TEST(Polynomial, PrintingIsCanonical) {
  EXPECT_EQ(P("x2^2 + x1*x3", 3).str(), "x1*x3 + x2^2");
  EXPECT_EQ(P("1/2*x1 - 3/4", 1).str(), "1/2*x1 - 3/4");
  EXPECT_EQ(Polynomial(2).str(), "0");
}

class PolyProperty : public ::testing::Test {
 protected:
  Rng rng{20261016};
  Polynomial random_poly(std::size_t n) { return random_nonzero_polynomial(rng, shape(n, 4, 4)); }
};

TEST_F(PolyProperty, DegreeAndInitialFormAreMultiplicative) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const WeightVector w = t % 3 == 0 ? lex_weights(rng, n) : as_weights(random_int_weights(rng, n, -3, 3));
    const Polynomial f = random_poly(n), g = random_poly(n);
    EXPECT_EQ(weighted_degree(f * g, w), weighted_degree(f, w) + weighted_degree(g, w));
    EXPECT_EQ(initial_form(f * g, w), initial_form(f, w) * initial_form(g, w))
        << f.str() << " | " << g.str() << " | " << w.str();
  }
}

TEST_F(PolyProperty, DegreeMatchesOracle) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto wi = random_int_weights(rng, n, -3, 3);
    const Polynomial f = random_poly(n);
    EXPECT_EQ(weighted_degree(f, as_weights(wi)), D(*oracle::weighted_degree(oracle::from_library(f), wi)));
  }
}

TEST_F(PolyProperty, SumDegreeRule) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const WeightVector w = as_weights(random_int_weights(rng, n, -2, 3));
    const Polynomial f = random_poly(n), g = random_poly(n);
    const Degree df = weighted_degree(f, w), dg = weighted_degree(g, w);
    const Degree ds = weighted_degree(f + g, w);
    EXPECT_LE(ds, max(df, dg));
    if (df != dg) EXPECT_EQ(ds, max(df, dg));
  }
}

TEST_F(PolyProperty, RemainderBelowInitialForm) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const WeightVector w = t % 2 ? lex_weights(rng, n) : as_weights(random_int_weights(rng, n, -3, 3));
    const Polynomial f = random_poly(n);
    const Polynomial fw = initial_form(f, w);
    EXPECT_TRUE(is_homogeneous(fw, w));
    EXPECT_LT(weighted_degree(f - fw, w), weighted_degree(f, w));
  }
}

TEST_F(PolyProperty, NonnegativeWeightsGiveNonnegativeDegree) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const Polynomial f = random_poly(n);
    EXPECT_GE(weighted_degree(f, as_weights(random_int_weights(rng, n, 0, 3))), D(0));
    EXPECT_EQ(weighted_degree(f, WeightVector::uniform(n)), D(f.total_degree()));
  }
}

TEST_F(PolyProperty, ComponentsSumToInput) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const WeightVector w = as_weights(random_int_weights(rng, n, -2, 3));
    const Polynomial f = random_poly(n);
    Polynomial sum(n);
    for (const auto& [gamma, part] : homogeneous_components(f, w)) {
      EXPECT_FALSE(part.is_zero());
      EXPECT_TRUE(is_homogeneous(part, w));
      EXPECT_EQ(weighted_degree(part, w), Degree(gamma));
      sum += part;
    }
    EXPECT_EQ(sum, f);
  }
}

TEST_F(PolyProperty, ArithmeticMatchesOracle) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const Polynomial f = random_poly(n), g = random_poly(n);
    EXPECT_EQ(oracle::from_library(f * g), oracle::from_library(f) * oracle::from_library(g));
    EXPECT_EQ(oracle::from_library(f - g), oracle::from_library(f) - oracle::from_library(g));
    EXPECT_EQ(oracle::from_library(partial_derivative(f, 0)), oracle::from_library(f).diff(0));
  }
}

TEST_F(PolyProperty, PrintParseRoundTrip) {
  for (int t = 0; t < kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    Polynomial f = random_poly(n);
    if (t % 4 == 0) f = f.divided_by(Rational(rng.nonzero(-5, 5)) / 7);
    EXPECT_EQ(parse_polynomial(f.str(), n), f) << f.str();
  }
}

}  // namespace
