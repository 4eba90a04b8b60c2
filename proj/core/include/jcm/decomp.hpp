#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "jcm/interlacing.hpp"
#include "jcm/poly.hpp"

namespace jcm {

/// Coefficient of 1/(x + root) in a simple-pole expansion. Zero residues
/// (a root of a that is also a root of b) are kept.
struct Residue {
  Rational root;
  Rational value;
};

/// b(x)/a(x) = c0 (x + c + sum_i A_i / (x + a_i)) for deg a = deg b - 1.
struct PartialFraction {
  Rational c0;
  Rational c;
  std::vector<Residue> residues;
  /// How the input roots satisfy b_1 <= a_1 <= ... <= a_l <= b_k.
  InterlacingRegime regime = InterlacingRegime::none;
};

/// b(x) = quotient(x) a(x) + sum_i value_i a(x)/(x + root_i).
struct QuotientResidue {
  DensePoly quotient;
  std::vector<Residue> residues;
};

/// Closed-form decomposition: c0 = b0/a0, c = sum b_j - sum a_i and
/// A_i = prod_j (b_j - a_i) / prod_{j != i} (a_j - a_i).
///
/// Throws DegreeError unless deg a = deg b - 1 and SimpleRootsRequired when a
/// has a repeated root. The reconstruction identity is checked exactly before
/// returning (InternalError on failure).
PartialFraction partial_fraction_decompose(const FactoredPoly& b, const FactoredPoly& a);

/// Long division plus simple-pole residues for any deg a < deg b.
/// Residue at a_i is b(-a_i) / (a0 prod_{j != i} (a_j - a_i)).
QuotientResidue quotient_residue_decompose(const FactoredPoly& b, const FactoredPoly& a);

/// Outcome of comparing both sides of a reconstruction identity coefficient
/// by coefficient.
struct IdentityCheck {
  bool holds = true;
  /// Lowest power of x whose coefficients differ.
  std::optional<std::size_t> first_mismatch;
  Rational expected;  ///< coefficient of b at that power
  Rational actual;    ///< coefficient of the reconstruction at that power

  explicit operator bool() const { return holds; }
};

/// Rebuilds the right-hand side as a dense polynomial and compares it with b.
IdentityCheck reconstruct_and_verify(const PartialFraction& d, const FactoredPoly& b, const FactoredPoly& a);
IdentityCheck reconstruct_and_verify(const QuotientResidue& d, const FactoredPoly& b, const FactoredPoly& a);

/// Dense form of the right-hand side used by reconstruct_and_verify.
DensePoly reconstruct(const PartialFraction& d, const FactoredPoly& a);
DensePoly reconstruct(const QuotientResidue& d, const FactoredPoly& a);

}  // namespace jcm
