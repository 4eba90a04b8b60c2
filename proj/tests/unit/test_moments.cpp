#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "jcm/decomp.hpp"
#include "jcm/errors.hpp"
#include "jcm/moments.hpp"
#include "jcm/quadrature.hpp"
#include "jcm/sampling.hpp"
#include "oracles.hpp"

using jcm::FactoredPoly;
using jcm::Rational;
using jcm::WeightParams;

TEST(Quadrature, PolynomialsAndSmoothFunctions) {
  auto r = jcm::integrate([](double x) { return x * x * x; }, 0.0, 2.0);
  EXPECT_NEAR(r.value, 4.0, 1e-13);
  EXPECT_LE(r.error_bound, 1e-12);
  auto s = jcm::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  EXPECT_NEAR(s.value, 2.0, 1e-12);
  EXPECT_GT(s.evaluations, 0u);
}

TEST(Quadrature, EndpointLogSingularity) {
  auto r = jcm::integrate([](double s) { return -std::log(s); }, 0.0, 1.0);
  EXPECT_NEAR(r.value, 1.0, 1e-10);
}

TEST(Quadrature, EvaluationCapThrows) {
  jcm::QuadratureOptions opts;
  opts.abs_tol = 1e-300;
  opts.rel_tol = 0;
  opts.max_evaluations = 1000;
  EXPECT_THROW(jcm::integrate([](double x) { return std::sin(1.0 / x); }, 1e-9, 1.0, opts), jcm::AccuracyError);
}

TEST(LogMoment, ClosedFormValues) {
  auto a = jcm::log_moment_identity(1, 1, 0);
  EXPECT_NEAR(a.lhs.value, 1.0, 1e-12);
  EXPECT_EQ(a.rhs, 1.0);
  auto b = jcm::log_moment_identity(2, 1, 1);
  EXPECT_NEAR(b.lhs.value, 0.25, 1e-12);
  EXPECT_NEAR(b.lhs.value, oracle::log_power_integral(1.0, 1), 1e-12);
  auto c = jcm::log_moment_identity(3, Rational(1, 2), 2);
  EXPECT_DOUBLE_EQ(c.rhs, 0.064);
  EXPECT_TRUE(c.holds());
}

TEST(LogMoment, GridAgainstClosedForm) {
  for (unsigned k = 1; k <= 5; ++k)
    for (Rational x : {Rational(1, 2), Rational(1), Rational(3, 2)})
      for (unsigned n = 0; n <= 3; ++n) {
        auto r = jcm::log_moment_identity(k, x, n);
        double c = jcm::to_double(x) - 1.0 + n;
        double closed = oracle::log_power_integral(c, k - 1) / oracle::factorial(k - 1);
        EXPECT_NEAR(r.rhs, closed, 1e-14);
        EXPECT_TRUE(r.holds(1e-8)) << k << " " << x << " " << n << ": " << r.lhs.value << " vs " << r.rhs;
      }
}

TEST(BesselSeries, MatchesFactorialOracle) {
  for (double u : {0.0, 1e-6, 0.5, 1.0, 3.0, 10.0, 40.0})
    EXPECT_NEAR(std::exp(jcm::log_bessel_series(u, 1e-16)) / oracle::bessel_series(u), 1.0, 1e-13) << u;
  // Large argument: compare through log of the leading asymptotic growth.
  double big = jcm::log_bessel_series(1e6, 1e-16);
  EXPECT_TRUE(std::isfinite(big));
  EXPECT_NEAR(big / (2.0 * std::sqrt(1e6)), 1.0, 1e-2);
}

TEST(Weight, SeriesValues) {
  const double e1 = std::exp(-1.0);
  WeightParams wp(-1, 1, e1);
  EXPECT_NEAR(jcm::weight_eval(wp, e1), 1.5906368546373288, 1e-14);
  WeightParams zero(0, 1, 0.5);
  for (double s : {0.01, 0.3, 0.99}) EXPECT_EQ(jcm::weight_eval(zero, s), 0.0);
  WeightParams neg(-2, Rational(1, 2), 0.5);
  EXPECT_GT(jcm::weight_eval(neg, 0.9), 0.0);
}

TEST(Weight, NonNegativeForNegativeResidues) {
  gen::Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    WeightParams wp(-gen::positive(rng, 20, 3), gen::positive(rng, 20, 3), gen::uniform(rng, 1, 99) / 100.0);
    double s = gen::uniform(rng, 1, 999) / 1000.0;
    EXPECT_GE(jcm::weight_eval(wp, s), 0.0);
  }
}

TEST(Weight, DomainChecks) {
  EXPECT_THROW(WeightParams(-1, 0, 0.5), jcm::DomainError);
  EXPECT_THROW(WeightParams(-1, 1, 1.0), jcm::DomainError);
  EXPECT_THROW(WeightParams(-1, 1, 0.0), jcm::DomainError);
}

TEST(MeasureMoment, TargetsAndOracle) {
  WeightParams wp(-1, 1, 0.5);
  EXPECT_DOUBLE_EQ(jcm::measure_moment_target(wp, 0), 2.0);
  EXPECT_NEAR(jcm::measure_moment_target(wp, 5), 1.122462048309373, 1e-14);
  EXPECT_NEAR(jcm::measure_moment(wp, 0).value, 2.0, 1e-8);
  EXPECT_NEAR(jcm::measure_moment(wp, 5).value, jcm::measure_moment_target(wp, 5), 1e-8);
  WeightParams zero(0, 3, 0.3);
  EXPECT_DOUBLE_EQ(jcm::measure_moment(zero, 4).value, 1.0);
  for (unsigned m = 0; m <= 6; ++m)
    EXPECT_NEAR(jcm::measure_moment(wp, m).value, oracle::moment_by_terms(-1.0, 1.0, 0.5, m), 1e-9);
}

TEST(MeasureMoment, SampledDecompositions) {
  jcm::Rng rng(67);
  for (int trial = 0; trial < 5; ++trial) {
    auto p = jcm::random_interlacing(rng, 2 + trial % 3);
    auto d = jcm::partial_fraction_decompose(p.b(), p.a());
    for (const auto& r : d.residues)
      for (double t : {0.1, 0.9})
        for (unsigned m : {0u, 3u, 10u}) {
          WeightParams wp(r.value, r.root, t);
          {
            double target = jcm::measure_moment_target(wp, m);
            EXPECT_NEAR(jcm::measure_moment(wp, m).value, target, 1e-8 * std::max(1.0, target));
          }
        }
  }
}

TEST(ExponentialMoments, InterlacingTablesPass) {
  std::vector<double> ts{0.5, 0.99};
  auto rows = jcm::exponential_moment_test(FactoredPoly(1, {1, 3}), FactoredPoly(1, {2}), ts, 15);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) EXPECT_TRUE(row.pass) << row.t << " " << static_cast<double>(row.worst_margin);
  EXPECT_LT(std::fabs(static_cast<double>(rows[1].worst_margin)), 1e-3);
}

TEST(ExponentialMoments, CubeTableIsDiagnosticOnly) {
  std::vector<double> ts{0.5};
  auto rows = jcm::exponential_moment_test(FactoredPoly(1, {9, 9, 9}), FactoredPoly(1, {1}), ts, 15);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].length, 15u);
  EXPECT_TRUE(std::isfinite(static_cast<double>(rows[0].worst_margin)));
}

TEST(Representation, IntegralOfPowerGivesReciprocal) {
  jcm::TwoVarPoly p(FactoredPoly(1, {1, 3}), FactoredPoly(1, {2}));
  auto a = jcm::moment_representation_check(p, 0, 0);
  EXPECT_NEAR(a.integral.value, 1.0 / 3.0, 1e-11);
  EXPECT_DOUBLE_EQ(a.target, 1.0 / 3.0);
  EXPECT_NEAR(jcm::moment_representation_check(p, 0, 1).integral.value, 0.2, 1e-11);
  auto c = jcm::moment_representation_check(p, 3, 2);
  EXPECT_DOUBLE_EQ(c.target, 1.0 / 34.0);
  EXPECT_NEAR(c.integral.value, c.target, 1e-11);
}
