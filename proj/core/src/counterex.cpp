#include "jcm/counterex.hpp"

#include "jcm/errors.hpp"

namespace jcm {

std::string_view to_string(Family f) { return f == Family::family1 ? "family1" : "family2"; }

std::string_view describe(Family f) {
  return f == Family::family1 ? "b1=b, b2=2b, b3=3b, a1=1" : "b1=b2=b3=b, a1=1";
}

TwoVarPoly family_polynomial(Family f, const Rational& b) {
  if (b <= 0) throw DomainError("family parameter b must be positive");
  std::vector<Rational> roots = f == Family::family1 ? std::vector<Rational>{b, 2 * b, 3 * b} : std::vector<Rational>{b, b, b};
  return TwoVarPoly(FactoredPoly(1, std::move(roots)), FactoredPoly(1, {Rational(1)}));
}

DensePoly condition_poly(Family f) {
  if (f == Family::family1) return DensePoly({11, 48, 124, 144, 193, 132, -36});
  return DensePoly({11, 24, 33, 20, 15, 6, -1});
}

namespace {

void require_31(const TwoVarPoly& p) {
  if (p.b().degree() != 3 || p.a().degree() != 1)
    throw DegreeError("Delta_1 Delta_2 closed form is stated for deg b = 3, deg a = 1");
}

}  // namespace

Rational delta11_at(const TwoVarPoly& p, std::size_t m, std::size_t n) {
  require_31(p);
  auto beta = [&](std::size_t i, std::size_t j) -> Rational { return 1 / eval_p(p, i, j); };
  return beta(m + 1, n + 1) - beta(m, n + 1) - beta(m + 1, n) + beta(m, n);
}

Delta11ClosedForm delta11_closed_form(const TwoVarPoly& p, std::size_t m, std::size_t n) {
  require_31(p);
  Rational x0(static_cast<unsigned long>(m));
  Rational x1(static_cast<unsigned long>(m + 1));
  Rational nn(static_cast<unsigned long>(n));
  Delta11ClosedForm out;
  out.t1 = eval_factored(p.b(), x0);
  out.t2 = eval_factored(p.b(), x1);
  Rational a0 = eval_factored(p.a(), x0);
  Rational a1 = eval_factored(p.a(), x1);
  out.d1 = (out.t1 + a0 * (nn + 1)) * (out.t1 + a0 * nn);
  out.d2 = (out.t2 + a1 * (nn + 1)) * (out.t2 + a1 * nn);
  out.value = -a1 / out.d2 + a0 / out.d1;
  return out;
}

HyperbolaCheck hyperbola_condition(const Rational& t1, const Rational& t2) {
  if (t1 <= 0 || t2 <= 0) throw DomainError("hyperbola condition needs t1, t2 > 0");
  HyperbolaCheck out;
  Rational u = t2 + 3;
  Rational v = t1 + Rational(3, 2);
  out.hyperbola_lhs = 2 * u * u - 4 * v * v;
  out.condition = out.hyperbola_lhs < 1;
  out.d2_minus_2d1 = (t2 + 2) * (t2 + 4) - 2 * (t1 + 1) * (t1 + 2);
  if (out.condition != (out.d2_minus_2d1 < 0))
    throw InternalError("hyperbola form and D2 - 2 D1 disagree at t1 = " + to_string(t1) + ", t2 = " + to_string(t2));
  return out;
}

Rational family_condition_value(Family f, const Rational& b) {
  if (b <= 0) throw DomainError("family parameter b must be positive");
  return condition_poly(f)(b);
}

Bracket threshold_bisect(Family f, const Rational& lo, const Rational& hi, const Rational& tol) {
  if (tol <= 0) throw DomainError("bisection tolerance must be positive");
  if (lo >= hi) throw BracketError("bracket needs lo < hi");
  Bracket br{lo, hi};
  int s_lo = sign(family_condition_value(f, br.lo));
  int s_hi = sign(family_condition_value(f, br.hi));
  if (s_lo == 0) return {lo, lo};
  if (s_hi == 0) return {hi, hi};
  if (s_lo == s_hi)
    throw BracketError("condition has the same sign at " + to_string(lo) + " and " + to_string(hi));

  while (br.width() > tol) {
    Rational mid = br.midpoint();
    int s_mid = sign(family_condition_value(f, mid));
    if (s_mid == 0) return {mid, mid};
    if (s_mid == s_lo)
      br.lo = mid;
    else
      br.hi = mid;
  }
  return br;
}

std::vector<ScanRow> family_scan(Family f, std::span<const Rational> b_values, std::optional<Window> window,
                                 const CheckOptions& opts) {
  std::vector<ScanRow> rows;
  rows.reserve(b_values.size());
  for (const auto& b : b_values) {
    ScanRow row{b, family_condition_value(f, b), 0, std::nullopt};
    row.condition_sign = sign(row.condition_value);
    if (window) row.window_certificate = jcm_check(family_polynomial(f, b), *window, opts);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace jcm
