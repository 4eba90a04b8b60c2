#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "jcm/poly.hpp"

namespace jcm {

enum class Tristate { not_applicable, holds, fails };
std::string_view to_string(Tristate t);

/// Which closed-form chain to test.
enum class InterlaceMode {
  equal_degree,  ///< l = k: b_1 <= a_1 <= ... <= b_k <= a_k
  one_below,     ///< l = k - 1: b_1 <= a_1 <= ... <= a_l <= b_k
};

/// Sufficient condition chain. `not_applicable` when the root counts do not
/// fit the mode.
Tristate interlace_check(std::span<const Rational> a_roots, std::span<const Rational> b_roots, InterlaceMode mode);

/// A condition that is always evaluated but only meaningful in some regime.
struct GatedCondition {
  bool applicable = false;
  bool holds = false;
  Rational lhs;
  Rational rhs;

  Tristate state() const { return applicable ? (holds ? Tristate::holds : Tristate::fails) : Tristate::not_applicable; }
};

struct NecessaryConditions {
  /// sum 1/a_j <= sum 1/b_j; necessary for every l < k and for l = k.
  bool reciprocal_sum = false;
  Rational reciprocal_a;
  Rational reciprocal_b;
  /// prod b_j <= prod a_j; only necessary when l = k.
  GatedCondition product;
  /// sum b_j <= sum a_j; only necessary when l = k.
  GatedCondition sum;
};

NecessaryConditions necessary_conditions(std::span<const Rational> a_roots, std::span<const Rational> b_roots);

struct DerivativeCheck {
  /// a'(x) b(x) <= a(x) b'(x) at every grid point.
  bool holds = true;
  /// deg a <= deg b.
  bool degree_condition = true;
  std::optional<Rational> first_failure;
};

/// Exact evaluation of a'(x) b(x) <= a(x) b'(x) on the grid (points must be >= 0).
/// A degree violation short-circuits with holds = false.
DerivativeCheck derivative_inequality_check(const TwoVarPoly& p, std::span<const Rational> grid);

enum class Classification { jcm, not_jcm };
std::string_view to_string(Classification c);

/// Decision for b(x) = b0 (x+b1)(x+b2), a(x) = a0 (x+a1): JCM iff b1 <= a1 <= b2.
/// Requires b1 <= b2 and all parameters positive (DomainError otherwise).
Classification classify_21(const Rational& b0, const Rational& b1, const Rational& b2, const Rational& a0,
                           const Rational& a1);

/// Everything the closed-form criteria say about one polynomial. Necessary
/// conditions failing rule JCM out; passing them never implies JCM.
struct CriteriaReport {
  Tristate interlacing_lk = Tristate::not_applicable;
  Tristate interlacing_l_km1 = Tristate::not_applicable;
  bool reciprocal_sum_necessary = false;
  Rational reciprocal_a;
  Rational reciprocal_b;
  GatedCondition product_necessary;
  GatedCondition sum_necessary;
  bool derivative_inequality_grid = false;
  bool degree_condition = false;
  std::optional<Rational> derivative_failure;
  /// classify_21 verdict when the polynomial has bi-degree (2,1) with l = 1.
  std::optional<Classification> exact_21;
};

CriteriaReport evaluate_criteria(const TwoVarPoly& p, std::span<const Rational> grid);

}  // namespace jcm
