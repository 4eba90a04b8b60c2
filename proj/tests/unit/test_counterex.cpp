#include <gtest/gtest.h>

#include "generators.hpp"
#include "jcm/cmnet.hpp"
#include "jcm/counterex.hpp"
#include "jcm/errors.hpp"
#include "oracles.hpp"

using jcm::Family;
using jcm::FactoredPoly;
using jcm::Rational;
using jcm::TwoVarPoly;

namespace {

/// D2 - 2 D1 at (m, n) = (0, 1) for b = lead (x + r1)(x + r2)(x + r3), a = x + 1,
/// written out from the definition of the net.
Rational numerator_by_hand(const TwoVarPoly& p) {
  oracle::Net x = [&](std::size_t m, std::size_t n) -> Rational { return 1 / jcm::eval_p(p, m, n); };
  Rational d = oracle::difference(x, 0, 1, 1, 1);
  Rational D1 = jcm::eval_p(p, 0, 1) * jcm::eval_p(p, 0, 2);
  Rational D2 = jcm::eval_p(p, 1, 1) * jcm::eval_p(p, 1, 2);
  return d * D1 * D2;
}

}  // namespace

TEST(Families, Polynomials) {
  auto p = jcm::family_polynomial(Family::family2, 9);
  EXPECT_EQ(p.b(), FactoredPoly(1, {9, 9, 9}));
  EXPECT_EQ(p.a(), FactoredPoly(1, {1}));
  EXPECT_EQ(jcm::condition_poly(Family::family1).coeffs(), (std::vector<Rational>{11, 48, 124, 144, 193, 132, -36}));
  EXPECT_EQ(jcm::condition_poly(Family::family2).coeffs(), (std::vector<Rational>{11, 24, 33, 20, 15, 6, -1}));
}

TEST(Families, ConditionValues) {
  EXPECT_EQ(jcm::family_condition_value(Family::family2, 9), -61252);
  EXPECT_EQ(jcm::family_condition_value(Family::family1, 5), -8024);
  EXPECT_EQ(jcm::family_condition_value(Family::family1, Rational(9, 2)), Rational(317149, 8));
  EXPECT_EQ(jcm::family_condition_value(Family::family2, 8), 8459);
}

TEST(Delta11, CubeValue) {
  auto p = jcm::family_polynomial(Family::family2, 9);
  Rational v = jcm::delta11_at(p, 0, 1);
  EXPECT_EQ(v, Rational(-61252) / (Rational(533630) * 1006008));
  auto cf = jcm::delta11_closed_form(p, 0, 1);
  EXPECT_EQ(cf.value, v);
  EXPECT_EQ(cf.d1, 533630);
  EXPECT_EQ(cf.d2, 1006008);
  EXPECT_EQ(cf.t1, 729);
  EXPECT_EQ(cf.t2, 1000);
}

TEST(Delta11, SmallRoots) {
  TwoVarPoly p(FactoredPoly(1, {1, 2, 3}), FactoredPoly(1, {1}));
  auto cf = jcm::delta11_closed_form(p, 0, 1);
  EXPECT_EQ(cf.d1, 56);
  EXPECT_EQ(cf.d2, 728);
  EXPECT_EQ(cf.value, Rational(728 - 112) / (56 * 728));
  EXPECT_GT(jcm::delta11_at(p, 0, 1), 0);
}

TEST(Delta11, PathsAgreeOnRandomInstances) {
  gen::Rng rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    TwoVarPoly p(FactoredPoly(gen::positive(rng), gen::positives(rng, 3)), FactoredPoly(gen::positive(rng), gen::positives(rng, 1)));
    std::size_t m = gen::uniform(rng, 0, 4), n = gen::uniform(rng, 0, 4);
    EXPECT_EQ(jcm::delta11_at(p, m, n), jcm::delta11_closed_form(p, m, n).value);
  }
  TwoVarPoly q(FactoredPoly(1, {1, 3}), FactoredPoly(1, {2}));
  EXPECT_THROW(jcm::delta11_at(q, 0, 0), jcm::DegreeError);
}

TEST(Hyperbola, Conditions) {
  auto neg = jcm::hyperbola_condition(729, 1000);
  EXPECT_TRUE(neg.condition);
  EXPECT_EQ(neg.d2_minus_2d1, -61252);
  auto pos = jcm::hyperbola_condition(6, 24);
  EXPECT_FALSE(pos.condition);
  EXPECT_EQ(pos.d2_minus_2d1, 728 - 112);
}

TEST(Hyperbola, SignAgreesWithNumerator) {
  gen::Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    Rational t1 = gen::positive(rng, 2000, 3), t2 = gen::positive(rng, 2000, 3);
    auto h = jcm::hyperbola_condition(t1, t2);
    Rational D1 = (t1 + 1) * (t1 + 2), D2 = (t2 + 2) * (t2 + 4);
    EXPECT_EQ(h.d2_minus_2d1, D2 - 2 * D1);
    EXPECT_EQ(h.condition, D2 - 2 * D1 < 0);
  }
}

TEST(Substitution, ConditionEqualsDifferenceNumerator) {
  gen::Rng rng(79);
  for (int trial = 0; trial < 50; ++trial) {
    Rational b = gen::positive(rng, 40, 7);
    for (Family f : {Family::family1, Family::family2}) {
      auto p = jcm::family_polynomial(f, b);
      EXPECT_EQ(jcm::family_condition_value(f, b), numerator_by_hand(p)) << jcm::to_string(f) << " b=" << b;
    }
  }
}

TEST(Substitution, NegativeConditionGivesWindowCertificate) {
  gen::Rng rng(83);
  int negatives = 0;
  for (int trial = 0; trial < 30; ++trial) {
    Rational b = gen::positive(rng, 60, 4);
    for (Family f : {Family::family1, Family::family2}) {
      if (jcm::family_condition_value(f, b) >= 0) continue;
      ++negatives;
      auto cert = jcm::jcm_check(jcm::family_polynomial(f, b), jcm::Window(2, 2));
      EXPECT_NE(cert.find({0, 1}, {1, 1}), nullptr);
    }
  }
  EXPECT_GT(negatives, 0);
}

TEST(Bisect, Thresholds) {
  Rational tol(1, 1000);
  auto f1 = jcm::threshold_bisect(Family::family1, 4, 6, tol);
  EXPECT_LE(f1.width(), tol);
  EXPECT_GE(f1.midpoint(), Rational(493, 100));
  EXPECT_LE(f1.midpoint(), Rational(495, 100));
  auto f2 = jcm::threshold_bisect(Family::family2, 8, 9, tol);
  EXPECT_GE(f2.midpoint(), Rational(818, 100));
  EXPECT_LE(f2.midpoint(), Rational(820, 100));
  for (auto [f, br] : {std::pair{Family::family1, f1}, std::pair{Family::family2, f2}})
    EXPECT_LT(jcm::sign(jcm::family_condition_value(f, br.lo)) * jcm::sign(jcm::family_condition_value(f, br.hi)), 0);
  EXPECT_THROW(jcm::threshold_bisect(Family::family2, 1, 2, tol), jcm::BracketError);
}

TEST(Scan, SignsAndCertificates) {
  std::vector<Rational> b1{Rational(9, 2), 5};
  auto r1 = jcm::family_scan(Family::family1, b1);
  ASSERT_EQ(r1.size(), 2u);
  EXPECT_EQ(r1[0].condition_sign, 1);
  EXPECT_EQ(r1[1].condition_sign, -1);
  EXPECT_FALSE(r1[0].window_certificate.has_value());
  std::vector<Rational> b2{8, 9};
  auto r2 = jcm::family_scan(Family::family2, b2, jcm::Window(2, 2));
  EXPECT_EQ(r2[0].condition_sign, 1);
  EXPECT_EQ(r2[1].condition_sign, -1);
  ASSERT_TRUE(r2[1].window_certificate.has_value());
  EXPECT_FALSE(r2[1].window_certificate->passed());
}
