#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "jcm/poly.hpp"

namespace jcm {

/// Deterministic generator for randomized suites; same seed, same draws.
using Rng = std::mt19937_64;

struct SamplingRanges {
  std::int64_t max_numerator = 24;   ///< roots are num/den with 1 <= num <= max_numerator
  std::int64_t max_denominator = 4;  ///< and 1 <= den <= max_denominator
  std::int64_t max_lead = 3;         ///< leads are integers in [1, max_lead]
};

/// Positive rational num/den drawn from the ranges.
Rational random_positive(Rng& rng, const SamplingRanges& r = {});

/// Random p with deg b = k, deg a = k - 1 and b_1 <= a_1 <= b_2 <= ... <= b_k.
/// With `distinct_a` the a-roots are pairwise distinct (required by the
/// partial-fraction routines). Requires k >= 1.
TwoVarPoly random_interlacing(Rng& rng, std::size_t k, bool distinct_a = true, const SamplingRanges& r = {});

/// Random (b, a) with deg a = deg b - 1 and pairwise distinct a-roots, with no
/// ordering imposed.
TwoVarPoly random_one_below(Rng& rng, std::size_t k, const SamplingRanges& r = {});

}  // namespace jcm
