#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jcm/poly.hpp"
#include "jcm/quadrature.hpp"

namespace jcm {

/// One residue/pole pair of b/a together with the moment parameter t.
///   w(s, t) = s^{a-1} sum_{j>=1} (A log t)^j (-log s)^{j-1} / ((j-1)! j!)
/// is the density part of mu_{t}(ds) = delta_1(ds) + w(s, t) ds.
struct WeightParams {
  Rational residue;  ///< A
  Rational pole;     ///< a > 0
  double t;          ///< 0 < t < 1

  /// Throws DomainError unless pole > 0 and 0 < t < 1.
  WeightParams(Rational residue, Rational pole, double t);
};

struct LogMomentCheck {
  QuadratureResult lhs;
  double rhs;  ///< 1/(n + x)^k, computed exactly then rounded
  bool holds(double slack = 1e-10) const;
};

/// ((-1)^{k-1}/(k-1)!) int_0^1 (log s)^{k-1} s^{x-1+n} ds against 1/(n+x)^k.
/// When x - 1 + n < 0 the power singularity at s = 0 is removed by
/// s = u^{1/(x+n)} before integrating. Requires k >= 1 and x > 0.
LogMomentCheck log_moment_identity(unsigned k, const Rational& x, unsigned n, const QuadratureOptions& opts = {});

/// sum_{i>=0} u^i / (i! (i+1)!) for u >= 0, returned as its natural log.
/// Summation stops once the geometric tail bound falls below tol times the
/// partial sum.
double log_bessel_series(double u, double tol);

/// w(s, t) truncated so the neglected tail is below tol * |partial sum|.
double weight_eval(const WeightParams& wp, double s, double tol = 1e-15);

/// 1 + int_0^1 s^m w(s, t) ds; the 1 is the point mass at s = 1.
/// Integrated in v = -a log s, mapped onto [0, 1). The error bound is held to
/// tol * max(1, |value|); AccuracyError otherwise.
QuadratureResult measure_moment(const WeightParams& wp, unsigned m, double tol = 1e-10);

/// t^{A/(m+a)}, the value measure_moment must reproduce.
double measure_moment_target(const WeightParams& wp, unsigned m);

struct ExponentialMomentRow {
  double t;
  std::size_t length;
  bool pass;
  /// Minimum of (-1)^k Delta^k x_j over the table (negative = worst breach).
  long double worst_margin;
  /// (order, index) of the worst entry.
  std::size_t worst_order;
  std::size_t worst_index;
};

/// Floating-point complete-monotonicity table of {t^{b(m)/a(m)}} per t.
/// Entries above -slack count as non-negative. Requires deg a < deg b.
std::vector<ExponentialMomentRow> exponential_moment_test(const FactoredPoly& b, const FactoredPoly& a,
                                                          std::span<const double> t_grid, std::size_t length,
                                                          long double slack = 1e-12L);

struct RepresentationCheck {
  QuadratureResult integral;
  double target;  ///< 1/p(m, n)
};

/// int_0^1 t^{n + b(m)/a(m) - 1} / a(m) dt against 1/p(m, n).
RepresentationCheck moment_representation_check(const TwoVarPoly& p, std::size_t m, std::size_t n, double tol = 1e-12);

}  // namespace jcm
