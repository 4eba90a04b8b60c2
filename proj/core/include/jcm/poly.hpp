#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "jcm/rational.hpp"

namespace jcm {

/// Univariate polynomial in the monomial basis; coeffs[i] multiplies x^i.
/// The highest stored coefficient is nonzero unless the polynomial is zero,
/// in which case no coefficients are stored.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coeffs);

  static DensePoly constant(const Rational& c);
  /// x + shift
  static DensePoly linear_factor(const Rational& shift);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; the zero polynomial reports -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i (zero past the degree).
  Rational coeff(std::size_t i) const;

  Rational operator()(const Rational& x) const;
  DensePoly derivative() const;

  DensePoly& operator+=(const DensePoly& rhs);
  DensePoly& operator-=(const DensePoly& rhs);
  DensePoly& operator*=(const DensePoly& rhs);
  DensePoly& operator*=(const Rational& s);

  friend DensePoly operator+(DensePoly lhs, const DensePoly& rhs) { return lhs += rhs; }
  friend DensePoly operator-(DensePoly lhs, const DensePoly& rhs) { return lhs -= rhs; }
  friend DensePoly operator*(DensePoly lhs, const DensePoly& rhs) { return lhs *= rhs; }
  friend DensePoly operator*(DensePoly lhs, const Rational& s) { return lhs *= s; }
  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of polynomial long division.
struct DivMod {
  DensePoly quotient;
  DensePoly remainder;
};

/// num = quotient * den + remainder with deg(remainder) < deg(den).
DivMod divmod(const DensePoly& num, const DensePoly& den);

/// lead * prod_j (x + roots[j]) with lead > 0 and every root > 0.
/// Roots are stored as the shifts r_j so each factor reads (x + r_j).
class FactoredPoly {
 public:
  /// Throws DomainError when lead <= 0 or a root is <= 0.
  FactoredPoly(Rational lead, std::vector<Rational> roots);
  explicit FactoredPoly(Rational lead) : FactoredPoly(std::move(lead), {}) {}

  const Rational& lead() const { return lead_; }
  std::span<const Rational> roots() const { return roots_; }
  std::size_t degree() const { return roots_.size(); }

  /// True when no root value repeats.
  bool has_simple_roots() const;
  /// Same factors with the lead multiplied by s (> 0).
  FactoredPoly scaled(const Rational& s) const;
  /// Roots in ascending order.
  std::vector<Rational> sorted_roots() const;

  friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;

 private:
  Rational lead_;
  std::vector<Rational> roots_;
};

/// lead * prod (x + r_j), exactly.
Rational eval_factored(const FactoredPoly& f, const Rational& x);
/// f'(x) by the product rule over the factors.
Rational eval_factored_derivative(const FactoredPoly& f, const Rational& x);
/// Expanded coefficients of f.
DensePoly expand(const FactoredPoly& f);

/// Which degree relation TwoVarPoly enforces at construction.
enum class DegreeRule {
  a_below_b,  ///< deg a < deg b (the (k,1) bi-degree regime with l < k)
  any,        ///< no relation enforced (used for the l = k criteria)
};

/// p(x, y) = b(x) + a(x) y. Positive on the closed quadrant because both
/// factored polynomials have positive lead and roots.
class TwoVarPoly {
 public:
  TwoVarPoly(FactoredPoly b, FactoredPoly a, DegreeRule rule = DegreeRule::a_below_b);

  const FactoredPoly& b() const { return b_; }
  const FactoredPoly& a() const { return a_; }
  std::size_t k() const { return b_.degree(); }
  std::size_t l() const { return a_.degree(); }

  friend bool operator==(const TwoVarPoly&, const TwoVarPoly&) = default;

 private:
  FactoredPoly b_;
  FactoredPoly a_;
};

/// b(m) + a(m) n, exactly; always > 0.
Rational eval_p(const TwoVarPoly& p, std::size_t m, std::size_t n);
/// b(x) + a(x) y at rational points.
Rational eval_p(const TwoVarPoly& p, const Rational& x, const Rational& y);

}  // namespace jcm
