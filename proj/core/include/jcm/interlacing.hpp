#pragma once

#include <span>
#include <string_view>

#include "jcm/rational.hpp"

namespace jcm {

/// How an alternating root chain b1 <= a1 <= b2 <= ... is satisfied.
enum class InterlacingRegime {
  strict,      ///< every link is a strict inequality
  non_strict,  ///< the chain holds with at least one equality
  none,        ///< some link fails, or the lengths do not fit a chain
};

std::string_view to_string(InterlacingRegime r);

/// Evaluates the chain b_1 <= a_1 <= b_2 <= a_2 <= ... after sorting both root
/// lists ascending. Accepts |b| = |a| + 1 (chain ends in b_k) and |b| = |a|
/// (chain ends in a_k); other lengths give `none`.
InterlacingRegime chain_regime(std::span<const Rational> b_roots, std::span<const Rational> a_roots);

}  // namespace jcm
