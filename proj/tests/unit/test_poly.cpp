#include <gtest/gtest.h>

#include "generators.hpp"
#include "jcm/errors.hpp"
#include "jcm/poly.hpp"
#include "oracles.hpp"

using jcm::DensePoly;
using jcm::FactoredPoly;
using jcm::Rational;
using jcm::TwoVarPoly;

namespace {

FactoredPoly fp(Rational lead, std::vector<Rational> roots) { return FactoredPoly(lead, std::move(roots)); }

}  // namespace

TEST(FactoredPoly, EvaluatesProducts) {
  EXPECT_EQ(jcm::eval_factored(fp(1, {1, 3}), 2), 15);
  EXPECT_EQ(jcm::eval_factored(fp(1, {}), 7), 1);
  EXPECT_EQ(jcm::eval_factored(fp(2, {Rational(1, 2)}), Rational(1, 2)), 2);
}

TEST(FactoredPoly, RejectsNonPositiveParameters) {
  EXPECT_THROW(fp(0, {1}), jcm::DomainError);
  EXPECT_THROW(fp(-1, {1}), jcm::DomainError);
  EXPECT_THROW(fp(1, {0}), jcm::DomainError);
  EXPECT_THROW(fp(1, {2, -1}), jcm::DomainError);
}

TEST(FactoredPoly, ExpandsToAscendingCoefficients) {
  EXPECT_EQ(jcm::expand(fp(1, {1, 3})).coeffs(), (std::vector<Rational>{3, 4, 1}));
  EXPECT_EQ(jcm::expand(fp(2, {1})).coeffs(), (std::vector<Rational>{2, 2}));
  auto cubic = jcm::expand(fp(1, {1, 2, 3}));
  EXPECT_EQ(cubic.coeffs(), (std::vector<Rational>{6, 11, 6, 1}));
  for (int x : {-5, 0, 4, 9}) EXPECT_EQ(cubic(x), Rational((x + 1) * (x + 2) * (x + 3)));
}

TEST(FactoredPoly, ExpandMatchesConvolutionOracle) {
  gen::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto roots = gen::positives(rng, gen::uniform(rng, 0, 6));
    Rational lead = gen::positive(rng);
    auto f = fp(lead, roots);
    EXPECT_EQ(jcm::expand(f).coeffs(), oracle::expand(lead, roots));
    Rational x = gen::signed_rational(rng);
    EXPECT_EQ(jcm::eval_factored(f, x), oracle::horner(oracle::expand(lead, roots), x));
    EXPECT_EQ(jcm::eval_factored_derivative(f, x), jcm::expand(f).derivative()(x));
  }
}

TEST(FactoredPoly, SimpleRootsAndSorting) {
  EXPECT_TRUE(fp(1, {3, 1, 2}).has_simple_roots());
  EXPECT_FALSE(fp(1, {2, 1, 2}).has_simple_roots());
  EXPECT_EQ(fp(1, {3, 1, 2}).sorted_roots(), (std::vector<Rational>{1, 2, 3}));
  EXPECT_EQ(fp(2, {1}).scaled(Rational(3, 2)).lead(), 3);
}

TEST(DensePoly, ArithmeticAndDivision) {
  DensePoly a({1, 2, 1});
  DensePoly b({-1, 1});
  EXPECT_EQ((a * b).coeffs(), (std::vector<Rational>{-1, -1, 1, 1}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_TRUE((a - a).is_zero());
  auto dm = jcm::divmod(a, b);
  EXPECT_EQ(dm.quotient.coeffs(), (std::vector<Rational>{3, 1}));
  EXPECT_EQ(dm.remainder.coeffs(), (std::vector<Rational>{4}));
  EXPECT_THROW(jcm::divmod(a, DensePoly()), jcm::DomainError);
}

TEST(DensePoly, DivisionMatchesOracle) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> num, den;
    for (int i = 0, n = gen::uniform(rng, 1, 7); i < n; ++i) num.push_back(gen::signed_rational(rng));
    for (int i = 0, n = gen::uniform(rng, 1, 4); i < n; ++i) den.push_back(gen::signed_rational(rng));
    if (den.back() == 0) den.back() = 1;
    DensePoly N(num), D(den);
    auto dm = jcm::divmod(N, D);
    auto [q, r] = oracle::long_divide(num, den);
    EXPECT_EQ(dm.quotient, DensePoly(q));
    EXPECT_EQ(dm.remainder, DensePoly(r));
    EXPECT_EQ(dm.quotient * D + dm.remainder, N);
  }
}

TEST(TwoVarPoly, EvaluatesNet) {
  TwoVarPoly p(fp(1, {1, 3}), fp(1, {2}));
  EXPECT_EQ(jcm::eval_p(p, 0, 1), 5);
  EXPECT_EQ(jcm::eval_p(p, 0, 0), 3);
  EXPECT_EQ(jcm::eval_p(p, 3, 2), 34);
  TwoVarPoly q(fp(1, {9, 9, 9}), fp(1, {1}));
  auto b = oracle::expand(1, {9, 9, 9});
  auto a = oracle::expand(1, {1});
  EXPECT_EQ(jcm::eval_p(q, 0, 1), oracle::horner(b, 0) + oracle::horner(a, 0));
  EXPECT_EQ(jcm::eval_p(q, 0, 1), 730);
}

TEST(TwoVarPoly, DegreeRule) {
  EXPECT_THROW(TwoVarPoly(fp(1, {1}), fp(1, {3})), jcm::DegreeError);
  EXPECT_NO_THROW(TwoVarPoly(fp(1, {1}), fp(2, {3}), jcm::DegreeRule::any));
  TwoVarPoly linear(fp(1, {1}), fp(1, {}));
  EXPECT_EQ(linear.k(), 1u);
  EXPECT_EQ(linear.l(), 0u);
}
