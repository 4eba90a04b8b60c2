#include "jcm/shifts.hpp"

#include <algorithm>
#include <cmath>

#include "jcm/errors.hpp"

namespace jcm {

namespace {

void fill_derived(ShiftProfile& prof) {
  const std::size_t M = prof.length;
  prof.alpha_sq.resize(M);
  prof.gamma_sq.resize(M + 1);
  prof.commutator_diag.resize(M);
  prof.gamma_sq[0] = 1;
  for (std::size_t m = 0; m < M; ++m) {
    prof.alpha_sq[m] = prof.beta[m + 1] / prof.beta[m];
    prof.gamma_sq[m + 1] = prof.beta[m + 1] / prof.beta[0];
    prof.commutator_diag[m] = m == 0 ? prof.alpha_sq[0] : Rational(prof.alpha_sq[m] - prof.alpha_sq[m - 1]);
  }
  prof.norm_z_sq = prof.beta[1] / prof.beta[0];

  const std::size_t power = std::max<std::size_t>(1, std::min<std::size_t>(64, M / 2));
  double best = 0.0;
  for (std::size_t i = 0; i + power <= M; ++i)
    best = std::max(best, std::pow(to_double(prof.beta[i + power] / prof.beta[i]), 0.5 / static_cast<double>(power)));
  prof.spectral_radius_est = best;
}

}  // namespace

ShiftProfile build_profile(const TwoVarPoly& p, std::size_t n, std::size_t M) {
  if (M < 2) throw DomainError("shift profile needs M >= 2");
  ShiftProfile prof;
  prof.n = n;
  prof.length = M;
  prof.beta.reserve(M + 1);
  for (std::size_t m = 0; m <= M; ++m) prof.beta.push_back(1 / eval_p(p, m, n));
  fill_derived(prof);
  return prof;
}

ShiftProfile profile_from_moments(std::vector<Rational> beta, std::size_t n) {
  if (beta.size() < 3) throw DomainError("shift profile needs at least three moments");
  for (const auto& b : beta)
    if (b <= 0) throw DomainError("moments must be positive");
  ShiftProfile prof;
  prof.n = n;
  prof.length = beta.size() - 1;
  prof.beta = std::move(beta);
  fill_derived(prof);
  return prof;
}

SubnormalReport subnormal_contraction_check(const ShiftProfile& profile, std::size_t cm_length) {
  SubnormalReport rep;
  for (std::size_t m = 0; m < profile.alpha_sq.size(); ++m) {
    if (profile.alpha_sq[m] > 1) {
      rep.contraction = false;
      rep.first_expansive = m;
      break;
    }
  }
  const std::size_t len = std::clamp<std::size_t>(cm_length, 2, profile.beta.size());
  rep.cm = cm_check_1d(std::span<const Rational>(profile.beta).first(len));
  return rep;
}

EssentialNormalityReport essential_normality_report(const ShiftProfile& profile) {
  if (profile.length < 10) throw DomainError("essential normality report needs M >= 10");
  EssentialNormalityReport rep;
  rep.diag.reserve(profile.commutator_diag.size());
  rep.telescoped_sum = 0;
  for (const auto& d : profile.commutator_diag) {
    rep.diag.push_back(to_double(d));
    rep.telescoped_sum += d;
  }
  rep.telescopes = rep.telescoped_sum == profile.alpha_sq.back();

  const std::size_t start = std::max<std::size_t>(1, profile.length / 2);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  rep.exactly_normal_tail = true;
  for (std::size_t m = start; m < rep.diag.size(); ++m) {
    rep.tail_max = std::max(rep.tail_max, std::abs(rep.diag[m]));
    if (profile.commutator_diag[m] == 0) continue;
    rep.exactly_normal_tail = false;
    const double x = std::log(static_cast<double>(m));
    const double y = std::log(std::abs(rep.diag[m]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count >= 2) {
    const double cnt = static_cast<double>(count);
    const double denom = cnt * sxx - sx * sx;
    if (denom != 0.0) rep.decay_exponent = (cnt * sxy - sx * sy) / denom;
  }
  return rep;
}

SpectralEstimate spectral_radius_estimate(const ShiftProfile& profile, std::span<const std::size_t> powers,
                                          std::size_t i_cap) {
  SpectralEstimate est;
  if (powers.empty()) return est;
  const std::size_t max_power = *std::max_element(powers.begin(), powers.end());
  if (i_cap + max_power > profile.length)
    throw DomainError("spectral estimate needs i_cap + max power <= profile length");
  for (std::size_t m : powers) {
    if (m == 0) throw DomainError("spectral estimate powers must be positive");
    double best = 0.0;
    const double exponent = 0.5 / static_cast<double>(m);
    for (std::size_t i = 0; i <= i_cap; ++i)
      best = std::max(best, std::pow(to_double(profile.beta[i + m] / profile.beta[i]), exponent));
    est.powers.push_back(m);
    est.estimates.push_back(best);
  }
  est.last = est.estimates.back();
  return est;
}

EquivalenceWitness unitary_equivalence_witness(const TwoVarPoly& p1, const TwoVarPoly& p2, std::size_t n,
                                               std::size_t M) {
  auto first = build_profile(p1, n, M);
  auto second = build_profile(p2, n, M);
  EquivalenceWitness w;
  w.norm_z_sq_first = first.norm_z_sq;
  w.norm_z_sq_second = second.norm_z_sq;
  for (std::size_t m = 0; m < M; ++m) {
    if (first.alpha_sq[m] != second.alpha_sq[m]) {
      w.identical = false;
      w.first_difference = m;
      break;
    }
  }
  return w;
}

}  // namespace jcm
