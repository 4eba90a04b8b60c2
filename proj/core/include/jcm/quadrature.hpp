#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "jcm/errors.hpp"

namespace jcm {

struct QuadratureResult {
  double value = 0.0;
  /// Sum of |K15 - G7| over the final partition; >= 0.
  double error_bound = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-13;
  std::size_t max_evaluations = 1'000'000;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes on [-1, 1] (non-negative half, centre last).
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the 7-point rule, matched to kronrod nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 4> gauss_weights = {0.129484966168869693270611432679082,
                                                        0.279705391489276667901467771423780,
                                                        0.381830050505118944950369775488975,
                                                        0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <typename F>
Panel gauss_kronrod(F& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kronrod = fc * kronrod_weights[7];
  double gauss = fc * gauss_weights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kronrod_nodes[i];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kronrod_weights[i] * pair;
    if (i % 2 == 1) gauss += gauss_weights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature on [lo, hi].
///
/// The panel with the largest |K15 - G7| is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol |I|). Integrable endpoint
/// singularities are fine since the rule never samples the endpoints.
/// Throws AccuracyError when max_evaluations is reached first.
template <typename F>
QuadratureResult integrate(F&& f, double lo, double hi, const QuadratureOptions& opts = {}) {
  constexpr std::size_t evals_per_panel = 15;
  std::priority_queue<detail::Panel> panels;
  QuadratureResult res;

  auto first = detail::gauss_kronrod(f, lo, hi);
  res.evaluations = evals_per_panel;
  double total = first.value;
  double error = first.error;
  panels.push(first);

  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (res.evaluations + 2 * evals_per_panel > opts.max_evaluations) {
      throw AccuracyError("quadrature did not reach tolerance within " + std::to_string(opts.max_evaluations) +
                          " evaluations (estimate " + std::to_string(error) + ")");
    }
    auto worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw AccuracyError("quadrature panel collapsed to machine precision near " + std::to_string(worst.lo));
    }
    auto left = detail::gauss_kronrod(f, worst.lo, mid);
    auto right = detail::gauss_kronrod(f, mid, worst.hi);
    res.evaluations += 2 * evals_per_panel;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed the drift of the running updates.
  res.value = 0.0;
  res.error_bound = 0.0;
  while (!panels.empty()) {
    res.value += panels.top().value;
    res.error_bound += panels.top().error;
    panels.pop();
  }
  return res;
}

}  // namespace jcm
