#include "jcm/poly.hpp"

#include <algorithm>

#include "jcm/errors.hpp"

namespace jcm {

DensePoly::DensePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DensePoly DensePoly::constant(const Rational& c) { return DensePoly({c}); }

DensePoly DensePoly::linear_factor(const Rational& shift) { return DensePoly({shift, Rational(1)}); }

Rational DensePoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational DensePoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DensePoly DensePoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return DensePoly(std::move(d));
}

DensePoly& DensePoly::operator+=(const DensePoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

DensePoly& DensePoly::operator*=(const DensePoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

DensePoly& DensePoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

void DensePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DivMod divmod(const DensePoly& num, const DensePoly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const int dd = den.degree();
  const Rational& dlead = den.coeffs().back();
  if (num.degree() < dd) return {DensePoly{}, num};

  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  for (int i = num.degree(); i >= dd; --i) {
    Rational factor = rem[static_cast<std::size_t>(i)] / dlead;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= factor * den.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

FactoredPoly::FactoredPoly(Rational lead, std::vector<Rational> roots) : lead_(std::move(lead)), roots_(std::move(roots)) {
  if (lead_ <= 0) throw DomainError("leading coefficient must be positive, got " + to_string(lead_));
  for (const auto& r : roots_)
    if (r <= 0) throw DomainError("roots must be positive shifts, got " + to_string(r));
}

bool FactoredPoly::has_simple_roots() const {
  auto sorted = sorted_roots();
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

FactoredPoly FactoredPoly::scaled(const Rational& s) const { return FactoredPoly(lead_ * s, roots_); }

std::vector<Rational> FactoredPoly::sorted_roots() const {
  std::vector<Rational> sorted = roots_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Rational eval_factored(const FactoredPoly& f, const Rational& x) {
  Rational acc = f.lead();
  for (const auto& r : f.roots()) acc *= x + r;
  return acc;
}

Rational eval_factored_derivative(const FactoredPoly& f, const Rational& x) {
  const auto roots = f.roots();
  Rational sum = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Rational term = 1;
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != i) term *= x + roots[j];
    sum += term;
  }
  return f.lead() * sum;
}

DensePoly expand(const FactoredPoly& f) {
  DensePoly acc = DensePoly::constant(f.lead());
  for (const auto& r : f.roots()) acc *= DensePoly::linear_factor(r);
  return acc;
}

TwoVarPoly::TwoVarPoly(FactoredPoly b, FactoredPoly a, DegreeRule rule) : b_(std::move(b)), a_(std::move(a)) {
  if (rule == DegreeRule::a_below_b && a_.degree() >= b_.degree())
    throw DegreeError("deg a = " + std::to_string(a_.degree()) + " must be below deg b = " + std::to_string(b_.degree()));
}

Rational eval_p(const TwoVarPoly& p, std::size_t m, std::size_t n) {
  Rational x(static_cast<unsigned long>(m));
  Rational y(static_cast<unsigned long>(n));
  return eval_p(p, x, y);
}

Rational eval_p(const TwoVarPoly& p, const Rational& x, const Rational& y) {
  return eval_factored(p.b(), x) + eval_factored(p.a(), x) * y;
}

}  // namespace jcm
