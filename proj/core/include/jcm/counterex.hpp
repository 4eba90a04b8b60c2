#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "jcm/cmnet.hpp"
#include "jcm/poly.hpp"

namespace jcm {

/// Bi-degree (3,1) families with a_1 = 1 and unit leads:
///   family1: b_1 = b, b_2 = 2b, b_3 = 3b
///   family2: b_1 = b_2 = b_3 = b
enum class Family { family1, family2 };

std::string_view to_string(Family f);
std::string_view describe(Family f);

/// p(x, y) = b(x) + a(x) y for the family member at parameter b > 0.
TwoVarPoly family_polynomial(Family f, const Rational& b);

/// Degree-6 polynomial in b (ascending coefficients) whose sign is the sign
/// of D2 - 2 D1 at (m, n) = (0, 1):
///   family1: 11 + 48b + 124b^2 + 144b^3 + 193b^4 + 132b^5 - 36b^6
///   family2: 11 + 24b + 33b^2 + 20b^3 + 15b^4 + 6b^5 - b^6
DensePoly condition_poly(Family f);

/// Delta_1 Delta_2 (1/p)(m, n) from the forward-difference definition.
/// Throws DegreeError unless deg b = 3 and deg a = 1.
Rational delta11_at(const TwoVarPoly& p, std::size_t m, std::size_t n);

/// The same value through -a(m+1)/D2 + a(m)/D1, with
///   D1 = (t1 + a(m)(n+1)) (t1 + a(m) n),      t1 = b(m),
///   D2 = (t2 + a(m+1)(n+1)) (t2 + a(m+1) n),  t2 = b(m+1).
struct Delta11ClosedForm {
  Rational value;
  Rational t1;
  Rational t2;
  Rational d1;
  Rational d2;
};
Delta11ClosedForm delta11_closed_form(const TwoVarPoly& p, std::size_t m, std::size_t n);

/// Condition for a negative Delta_1 Delta_2 at (0, 1) with a_1 = 1, written
/// as 2 (t2 + 3)^2 - 4 (t1 + 3/2)^2 < 1, and cross-checked against
/// D2 - 2 D1 < 0 with D1 = (t1+1)(t1+2), D2 = (t2+2)(t2+4).
struct HyperbolaCheck {
  bool condition;
  Rational hyperbola_lhs;
  Rational d2_minus_2d1;
};
/// Requires t1, t2 > 0. Throws InternalError if the two forms disagree.
HyperbolaCheck hyperbola_condition(const Rational& t1, const Rational& t2);

/// Exact value of the family's condition polynomial at b > 0.
Rational family_condition_value(Family f, const Rational& b);

/// Closed interval known to contain a sign change of the condition.
struct Bracket {
  Rational lo;
  Rational hi;
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

/// Exact bisection on the condition polynomial until hi - lo <= tol.
/// Throws BracketError when the endpoint values do not change sign.
Bracket threshold_bisect(Family f, const Rational& lo, const Rational& hi, const Rational& tol);

struct ScanRow {
  Rational b;
  Rational condition_value;
  int condition_sign;
  std::optional<DifferenceCertificate> window_certificate;
};

/// Condition sign per b, plus a full window check of the net when requested.
std::vector<ScanRow> family_scan(Family f, std::span<const Rational> b_values, std::optional<Window> window = {},
                                 const CheckOptions& opts = {});

}  // namespace jcm
