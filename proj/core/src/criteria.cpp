#include "jcm/criteria.hpp"

#include "jcm/errors.hpp"
#include "jcm/interlacing.hpp"

namespace jcm {

std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::not_applicable:
      return "not_applicable";
    case Tristate::holds:
      return "holds";
    case Tristate::fails:
      return "fails";
  }
  return "not_applicable";
}

std::string_view to_string(Classification c) { return c == Classification::jcm ? "jcm" : "not_jcm"; }

Tristate interlace_check(std::span<const Rational> a_roots, std::span<const Rational> b_roots, InterlaceMode mode) {
  const bool fits = mode == InterlaceMode::equal_degree ? a_roots.size() == b_roots.size()
                                                        : a_roots.size() + 1 == b_roots.size();
  if (!fits || b_roots.empty()) return Tristate::not_applicable;
  return chain_regime(b_roots, a_roots) == InterlacingRegime::none ? Tristate::fails : Tristate::holds;
}

NecessaryConditions necessary_conditions(std::span<const Rational> a_roots, std::span<const Rational> b_roots) {
  NecessaryConditions out;
  out.reciprocal_a = 0;
  out.reciprocal_b = 0;
  for (const auto& r : a_roots) out.reciprocal_a += 1 / r;
  for (const auto& r : b_roots) out.reciprocal_b += 1 / r;
  out.reciprocal_sum = out.reciprocal_a <= out.reciprocal_b;

  const bool equal_degree = a_roots.size() == b_roots.size();
  out.product.applicable = equal_degree;
  out.product.lhs = 1;
  out.product.rhs = 1;
  for (const auto& r : b_roots) out.product.lhs *= r;
  for (const auto& r : a_roots) out.product.rhs *= r;
  out.product.holds = out.product.lhs <= out.product.rhs;

  out.sum.applicable = equal_degree;
  out.sum.lhs = 0;
  out.sum.rhs = 0;
  for (const auto& r : b_roots) out.sum.lhs += r;
  for (const auto& r : a_roots) out.sum.rhs += r;
  out.sum.holds = out.sum.lhs <= out.sum.rhs;
  return out;
}

DerivativeCheck derivative_inequality_check(const TwoVarPoly& p, std::span<const Rational> grid) {
  DerivativeCheck out;
  out.degree_condition = p.a().degree() <= p.b().degree();
  if (!out.degree_condition) {
    out.holds = false;
    return out;
  }
  for (const auto& x : grid) {
    if (x < 0) throw DomainError("derivative grid points must be >= 0, got " + to_string(x));
    Rational lhs = eval_factored_derivative(p.a(), x) * eval_factored(p.b(), x);
    Rational rhs = eval_factored(p.a(), x) * eval_factored_derivative(p.b(), x);
    if (lhs > rhs) {
      out.holds = false;
      out.first_failure = x;
      break;
    }
  }
  return out;
}

Classification classify_21(const Rational& b0, const Rational& b1, const Rational& b2, const Rational& a0,
                           const Rational& a1) {
  if (b0 <= 0 || b1 <= 0 || b2 <= 0 || a0 <= 0 || a1 <= 0) throw DomainError("classify_21 parameters must be positive");
  if (b1 > b2) throw DomainError("classify_21 expects b1 <= b2");
  return b1 <= a1 && a1 <= b2 ? Classification::jcm : Classification::not_jcm;
}

CriteriaReport evaluate_criteria(const TwoVarPoly& p, std::span<const Rational> grid) {
  CriteriaReport r;
  const auto a_roots = p.a().roots();
  const auto b_roots = p.b().roots();
  r.interlacing_lk = interlace_check(a_roots, b_roots, InterlaceMode::equal_degree);
  r.interlacing_l_km1 = interlace_check(a_roots, b_roots, InterlaceMode::one_below);

  auto nec = necessary_conditions(a_roots, b_roots);
  r.reciprocal_sum_necessary = nec.reciprocal_sum;
  r.reciprocal_a = nec.reciprocal_a;
  r.reciprocal_b = nec.reciprocal_b;
  r.product_necessary = nec.product;
  r.sum_necessary = nec.sum;

  auto deriv = derivative_inequality_check(p, grid);
  r.derivative_inequality_grid = deriv.holds;
  r.degree_condition = deriv.degree_condition;
  r.derivative_failure = deriv.first_failure;

  if (p.b().degree() == 2 && p.a().degree() == 1) {
    auto b = p.b().sorted_roots();
    r.exact_21 = classify_21(p.b().lead(), b[0], b[1], p.a().lead(), p.a().roots()[0]);
  }
  return r;
}

}  // namespace jcm
