#include "jcm/decomp.hpp"

#include <algorithm>

#include "jcm/errors.hpp"

namespace jcm {

std::string_view to_string(InterlacingRegime r) {
  switch (r) {
    case InterlacingRegime::strict:
      return "strict";
    case InterlacingRegime::non_strict:
      return "non_strict";
    case InterlacingRegime::none:
      return "none";
  }
  return "none";
}

InterlacingRegime chain_regime(std::span<const Rational> b_roots, std::span<const Rational> a_roots) {
  if (b_roots.size() != a_roots.size() + 1 && b_roots.size() != a_roots.size()) return InterlacingRegime::none;
  std::vector<Rational> b(b_roots.begin(), b_roots.end());
  std::vector<Rational> a(a_roots.begin(), a_roots.end());
  std::sort(b.begin(), b.end());
  std::sort(a.begin(), a.end());

  std::vector<Rational> chain;
  chain.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    chain.push_back(b[i]);
    if (i < a.size()) chain.push_back(a[i]);
  }
  bool strict = true;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i] > chain[i + 1]) return InterlacingRegime::none;
    if (chain[i] == chain[i + 1]) strict = false;
  }
  return strict ? InterlacingRegime::strict : InterlacingRegime::non_strict;
}

namespace {

void require_simple(const FactoredPoly& a) {
  if (!a.has_simple_roots()) throw SimpleRootsRequired("the denominator polynomial a must have pairwise distinct roots");
}

/// a(x) / (x + a_i) as a dense polynomial, lead included.
DensePoly cofactor(const FactoredPoly& a, std::size_t skip) {
  DensePoly acc = DensePoly::constant(a.lead());
  for (std::size_t j = 0; j < a.degree(); ++j)
    if (j != skip) acc *= DensePoly::linear_factor(a.roots()[j]);
  return acc;
}

/// prod_{j != i} (a_j - a_i)
Rational root_gaps(const FactoredPoly& a, std::size_t i) {
  Rational prod = 1;
  for (std::size_t j = 0; j < a.degree(); ++j)
    if (j != i) prod *= a.roots()[j] - a.roots()[i];
  return prod;
}

IdentityCheck compare(const DensePoly& expected, const DensePoly& actual) {
  IdentityCheck check;
  const std::size_t n = static_cast<std::size_t>(std::max(expected.degree(), actual.degree()) + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (expected.coeff(i) != actual.coeff(i)) {
      check.holds = false;
      check.first_mismatch = i;
      check.expected = expected.coeff(i);
      check.actual = actual.coeff(i);
      break;
    }
  }
  return check;
}

}  // namespace

PartialFraction partial_fraction_decompose(const FactoredPoly& b, const FactoredPoly& a) {
  if (a.degree() + 1 != b.degree())
    throw DegreeError("partial fraction needs deg a = deg b - 1, got deg a = " + std::to_string(a.degree()) +
                      ", deg b = " + std::to_string(b.degree()));
  require_simple(a);

  PartialFraction d;
  d.c0 = b.lead() / a.lead();
  d.c = 0;
  for (const auto& r : b.roots()) d.c += r;
  for (const auto& r : a.roots()) d.c -= r;

  d.residues.reserve(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) {
    const Rational& ai = a.roots()[i];
    Rational num = 1;
    for (const auto& bj : b.roots()) num *= bj - ai;
    d.residues.push_back({ai, num / root_gaps(a, i)});
  }
  d.regime = chain_regime(b.roots(), a.roots());

  if (auto check = reconstruct_and_verify(d, b, a); !check)
    throw InternalError("partial fraction reconstruction failed at x^" + std::to_string(*check.first_mismatch));
  return d;
}

QuotientResidue quotient_residue_decompose(const FactoredPoly& b, const FactoredPoly& a) {
  if (a.degree() >= b.degree())
    throw DegreeError("quotient/residue needs deg a < deg b, got deg a = " + std::to_string(a.degree()) +
                      ", deg b = " + std::to_string(b.degree()));
  require_simple(a);

  QuotientResidue d;
  d.quotient = divmod(expand(b), expand(a)).quotient;
  d.residues.reserve(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) {
    const Rational& ai = a.roots()[i];
    d.residues.push_back({ai, eval_factored(b, -ai) / (a.lead() * root_gaps(a, i))});
  }
  return d;
}

DensePoly reconstruct(const PartialFraction& d, const FactoredPoly& a) {
  DensePoly inner = DensePoly::linear_factor(d.c) * expand(a);
  for (std::size_t i = 0; i < d.residues.size(); ++i) {
    std::size_t slot = i;
    // Residues are matched to a's roots by value so reordered outputs still work.
    for (std::size_t j = 0; j < a.degree(); ++j)
      if (a.roots()[j] == d.residues[i].root) slot = j;
    inner += cofactor(a, slot) * d.residues[i].value;
  }
  return inner * d.c0;
}

DensePoly reconstruct(const QuotientResidue& d, const FactoredPoly& a) {
  DensePoly acc = d.quotient * expand(a);
  for (std::size_t i = 0; i < d.residues.size(); ++i) {
    std::size_t slot = i;
    for (std::size_t j = 0; j < a.degree(); ++j)
      if (a.roots()[j] == d.residues[i].root) slot = j;
    acc += cofactor(a, slot) * d.residues[i].value;
  }
  return acc;
}

IdentityCheck reconstruct_and_verify(const PartialFraction& d, const FactoredPoly& b, const FactoredPoly& a) {
  return compare(expand(b), reconstruct(d, a));
}

IdentityCheck reconstruct_and_verify(const QuotientResidue& d, const FactoredPoly& b, const FactoredPoly& a) {
  return compare(expand(b), reconstruct(d, a));
}

}  // namespace jcm
