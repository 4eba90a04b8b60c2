#include "jcm/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jcm/errors.hpp"

namespace jcm {

WeightParams::WeightParams(Rational residue_, Rational pole_, double t_)
    : residue(std::move(residue_)), pole(std::move(pole_)), t(t_) {
  if (pole <= 0) throw DomainError("weight pole must be positive, got " + to_string(pole));
  if (!(t > 0.0 && t < 1.0)) throw DomainError("weight parameter t must lie in (0, 1)");
}

bool LogMomentCheck::holds(double slack) const { return std::abs(lhs.value - rhs) <= lhs.error_bound + slack; }

LogMomentCheck log_moment_identity(unsigned k, const Rational& x, unsigned n, const QuadratureOptions& opts) {
  if (k < 1) throw DomainError("log-moment identity needs k >= 1");
  if (x <= 0) throw DomainError("log-moment identity needs x > 0");

  Rational shifted = x + static_cast<unsigned long>(n);
  Rational rhs_exact = 1;
  for (unsigned i = 0; i < k; ++i) rhs_exact /= shifted;

  const double exponent = to_double(shifted) - 1.0;  // x - 1 + n
  const double log_fact = std::lgamma(static_cast<double>(k));  // log (k-1)!
  const double power = static_cast<double>(k - 1);

  LogMomentCheck out{};
  out.rhs = to_double(rhs_exact);
  if (exponent < 0.0) {
    // s = u^{1/(e+1)}: s^e ds = du/(e+1) and -log s = -log u/(e+1).
    const double scale = exponent + 1.0;
    out.lhs = integrate(
        [&](double u) {
          const double neg_log = -std::log(u) / scale;
          return std::exp(power * std::log(neg_log) - log_fact) / scale;
        },
        0.0, 1.0, opts);
  } else {
    out.lhs = integrate(
        [&](double s) {
          const double neg_log = -std::log(s);
          if (power == 0.0) return std::pow(s, exponent);
          return std::exp(power * std::log(neg_log) + exponent * std::log(s) - log_fact);
        },
        0.0, 1.0, opts);
  }
  return out;
}

double log_bessel_series(double u, double tol) {
  if (u < 0.0) throw DomainError("log_bessel_series needs u >= 0");
  if (u == 0.0) return 0.0;
  const double log_u = std::log(u);
  auto log_term = [&](double i) { return i * log_u - std::lgamma(i + 1.0) - std::lgamma(i + 2.0); };

  // Sum relative to the largest term, found near i = sqrt(u).
  const double peak_index = std::max(0.0, std::floor(std::sqrt(u)));
  const double log_peak = std::max(log_term(peak_index), log_term(peak_index + 1.0));

  double sum = 0.0;
  for (std::size_t i = 0; i < 10'000'000; ++i) {
    const double di = static_cast<double>(i);
    const double term = std::exp(log_term(di) - log_peak);
    sum += term;
    const double ratio = u / ((di + 1.0) * (di + 2.0));
    if (ratio < 0.5) {
      // Later ratios only shrink, so the tail is below term * ratio / (1 - ratio).
      const double tail = term * ratio / (1.0 - ratio);
      if (tail <= tol * sum) break;
    }
  }
  return log_peak + std::log(sum);
}

namespace {

/// z F(z L) for z < 0, where F(-x) = J_1(2 sqrt(x)) / sqrt(x).
double negative_branch(double z, double L, double tol) {
  const double x = -z * L;
  if (x > 1.0) {
    const double r = std::sqrt(x);
    return z * std::cyl_bessel_j(1.0, 2.0 * r) / r;
  }
  double term = 1.0;
  double sum = 1.0;
  for (std::size_t i = 0; i < 64; ++i) {
    const double di = static_cast<double>(i);
    term *= -x / ((di + 1.0) * (di + 2.0));
    sum += term;
    if (std::abs(term) <= tol * std::abs(sum)) break;
  }
  return z * sum;
}

}  // namespace

double weight_eval(const WeightParams& wp, double s, double tol) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("weight_eval needs s in (0, 1)");
  const double z = to_double(wp.residue) * std::log(wp.t);
  if (z == 0.0) return 0.0;
  const double L = -std::log(s);
  const double a = to_double(wp.pole);
  if (z > 0.0) return std::exp((a - 1.0) * std::log(s) + std::log(z) + log_bessel_series(z * L, tol));
  return std::pow(s, a - 1.0) * negative_branch(z, L, tol);
}

QuadratureResult measure_moment(const WeightParams& wp, unsigned m, double tol) {
  const double z = to_double(wp.residue) * std::log(wp.t);
  if (z == 0.0) return {1.0, 0.0, 0};
  const double a = to_double(wp.pole);
  const double power = static_cast<double>(m) / a;
  const double series_tol = std::numeric_limits<double>::epsilon();

  // s = exp(-v/a) turns s^m w(s) ds into (1/a) e^{-(m/a + 1) v} z F(z v / a) dv on
  // [0, inf), and v = x / (1 - x) maps that onto [0, 1).
  const double decay = power + 1.0;
  auto in_v = [&](double v) {
    const double L = v / a;
    // F(x) <= exp(2 sqrt(x)) for x >= 0 and |F| <= 1 for x < 0.
    const double growth = z > 0.0 ? 2.0 * std::sqrt(z * L) : 0.0;
    if (!std::isfinite(v) || -decay * v + growth + std::log(std::abs(z) / a) < -745.0) return 0.0;
    if (z > 0.0) return std::exp(-decay * v + std::log(z) + log_bessel_series(z * L, series_tol)) / a;
    return std::exp(-decay * v) * negative_branch(z, L, series_tol) / a;
  };
  auto integrand = [&](double x) {
    const double one_minus = 1.0 - x;
    return in_v(x / one_minus) / (one_minus * one_minus);
  };

  QuadratureOptions opts;
  opts.abs_tol = tol;
  opts.rel_tol = tol;
  QuadratureResult res = integrate(integrand, 0.0, 1.0, opts);
  res.value += 1.0;
  if (res.error_bound > tol * std::max(1.0, std::abs(res.value)))
    throw AccuracyError("measure moment error bound exceeds tolerance");
  return res;
}

double measure_moment_target(const WeightParams& wp, unsigned m) {
  Rational exponent = wp.residue / (wp.pole + static_cast<unsigned long>(m));
  return std::exp(to_double(exponent) * std::log(wp.t));
}

std::vector<ExponentialMomentRow> exponential_moment_test(const FactoredPoly& b, const FactoredPoly& a,
                                                          std::span<const double> t_grid, std::size_t length,
                                                          long double slack) {
  if (a.degree() >= b.degree()) throw DegreeError("exponential moment test needs deg a < deg b");
  if (length < 2) throw DomainError("exponential moment test needs length >= 2");

  std::vector<long double> exponents(length);
  for (std::size_t m = 0; m < length; ++m) {
    Rational x(static_cast<unsigned long>(m));
    exponents[m] = to_long_double(eval_factored(b, x) / eval_factored(a, x));
  }

  std::vector<ExponentialMomentRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("t must lie in (0, 1)");
    const long double log_t = std::log(static_cast<long double>(t));
    std::vector<long double> work(length);
    for (std::size_t m = 0; m < length; ++m) work[m] = std::exp(exponents[m] * log_t);

    ExponentialMomentRow row{t, length, true, std::numeric_limits<long double>::infinity(), 0, 0};
    for (std::size_t order = 0; order < length; ++order) {
      if (order > 0)
        for (std::size_t j = 0; j + order < length; ++j) work[j] = work[j + 1] - work[j];
      for (std::size_t j = 0; j + order < length; ++j) {
        const long double signed_value = order % 2 == 0 ? work[j] : -work[j];
        if (signed_value < row.worst_margin) {
          row.worst_margin = signed_value;
          row.worst_order = order;
          row.worst_index = j;
        }
      }
    }
    row.pass = row.worst_margin >= -slack;
    rows.push_back(row);
  }
  return rows;
}

RepresentationCheck moment_representation_check(const TwoVarPoly& p, std::size_t m, std::size_t n, double tol) {
  Rational x(static_cast<unsigned long>(m));
  Rational am = eval_factored(p.a(), x);
  Rational ratio = eval_factored(p.b(), x) / am;
  const double exponent = static_cast<double>(n) + to_double(ratio) - 1.0;
  const double inv_a = to_double(1 / am);

  QuadratureOptions opts;
  opts.abs_tol = tol;
  RepresentationCheck out{};
  out.target = to_double(1 / eval_p(p, m, n));
  if (exponent < 0.0) {
    // t = u^{1/(e+1)} flattens t^e dt to du/(e+1).
    const double scale = exponent + 1.0;
    out.integral = integrate([&](double) { return inv_a / scale; }, 0.0, 1.0, opts);
  } else {
    out.integral = integrate([&](double t) { return std::pow(t, exponent) * inv_a; }, 0.0, 1.0, opts);
  }
  return out;
}

}  // namespace jcm
