#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "jcm/cmnet.hpp"
#include "jcm/poly.hpp"

namespace jcm {

/// Unilateral weighted shift built from beta_m = 1/p(m, n) at fixed n.
/// Every quantity that would need a square root is kept squared and exact.
struct ShiftProfile {
  std::size_t n = 0;
  /// Number of weights M; beta and gamma_sq hold M + 1 entries.
  std::size_t length = 0;
  std::vector<Rational> beta;
  /// alpha_m^2 = beta_{m+1} / beta_m, m < M.
  std::vector<Rational> alpha_sq;
  /// gamma_m^2 = beta_m / beta_0 = alpha_0^2 ... alpha_{m-1}^2.
  std::vector<Rational> gamma_sq;
  /// Diagonal of T*T - TT*: d_0 = alpha_0^2, d_m = alpha_m^2 - alpha_{m-1}^2.
  std::vector<Rational> commutator_diag;
  /// ||z||^2 in H^2(gamma), i.e. beta_1 / beta_0.
  Rational norm_z_sq;
  /// max_i (beta_{i+m}/beta_i)^{1/(2m)} for the largest m the profile allows.
  double spectral_radius_est = 0.0;
};

/// Requires M >= 2.
ShiftProfile build_profile(const TwoVarPoly& p, std::size_t n, std::size_t M);

/// Profile for an arbitrary positive moment sequence (length = beta.size() - 1).
ShiftProfile profile_from_moments(std::vector<Rational> beta, std::size_t n = 0);

struct SubnormalReport {
  /// alpha_m^2 <= 1 for every m in the profile.
  bool contraction = true;
  std::optional<std::size_t> first_expansive;
  /// Complete monotonicity of the beta prefix (moment-sequence evidence).
  DifferenceCertificate cm;
};

/// cm_length terms of beta (capped at the profile) go through cm_check_1d.
SubnormalReport subnormal_contraction_check(const ShiftProfile& profile, std::size_t cm_length);

struct EssentialNormalityReport {
  std::vector<double> diag;
  /// max |d_m| over m >= M/2.
  double tail_max = 0.0;
  /// Least-squares slope of log|d_m| against log m over the tail.
  std::optional<double> decay_exponent;
  /// Every tail entry is exactly zero.
  bool exactly_normal_tail = false;
  /// sum_m d_m, which telescopes to alpha_{M-1}^2.
  Rational telescoped_sum;
  bool telescopes = false;
};

/// Requires M >= 10.
EssentialNormalityReport essential_normality_report(const ShiftProfile& profile);

struct SpectralEstimate {
  std::vector<std::size_t> powers;
  /// Lower bounds for ||T^m||^{1/m}, one per power.
  std::vector<double> estimates;
  double last = 0.0;
};

/// For each m, max over 0 <= i <= i_cap of (beta_{i+m}/beta_i)^{1/(2m)}.
/// The sup over all i is a limit as i grows, so each value is a lower bound
/// on ||T^m||^{1/m}. Requires i_cap + max(powers) <= M.
SpectralEstimate spectral_radius_estimate(const ShiftProfile& profile, std::span<const std::size_t> powers,
                                          std::size_t i_cap);

struct EquivalenceWitness {
  bool identical = true;
  std::optional<std::size_t> first_difference;
  Rational norm_z_sq_first;
  Rational norm_z_sq_second;
};

/// Compares the alpha^2 sequences of the two shifts over the first M weights.
EquivalenceWitness unitary_equivalence_witness(const TwoVarPoly& p1, const TwoVarPoly& p2, std::size_t n,
                                               std::size_t M = 64);

}  // namespace jcm
