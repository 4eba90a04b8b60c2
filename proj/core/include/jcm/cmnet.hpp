#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "jcm/poly.hpp"
#include "jcm/rational.hpp"

namespace jcm {

/// Multi-index over the two net directions: [0] is m, [1] is n.
using MultiIndex = std::array<std::size_t, 2>;

/// Finite truncation of a net: indices 0..M in the first direction and
/// 0..N in the second, so (M+1)(N+1) sampled values.
struct Window {
  std::size_t M;
  std::size_t N;

  /// Throws DomainError unless M >= 1 and N >= 1.
  Window(std::size_t M, std::size_t N);
  bool contains(const MultiIndex& idx) const { return idx[0] <= M && idx[1] <= N; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// Dense rectangular table of exact values x[i][j].
class Grid {
 public:
  Grid(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const Rational& at(const MultiIndex& idx) const { return at(idx[0], idx[1]); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Samples 1/p(m, n) for 0 <= m <= M, 0 <= n <= N.
Grid sample_net(const TwoVarPoly& p, const Window& w);

/// Delta^beta at alpha by repeated forward differences (Delta_1 first).
Rational difference_iterated(const Grid& values, const MultiIndex& alpha, const MultiIndex& beta);

/// Delta^beta at alpha by the expansion
///   sum_{gamma <= beta} (-1)^{|beta|-|gamma|} C(beta, gamma) x_{alpha+gamma}.
Rational difference_binomial(const Grid& values, const MultiIndex& alpha, const MultiIndex& beta);

/// Exact mixed difference, computed by both routes above. Throws IndexError
/// if alpha+beta leaves the grid and InternalError if the routes disagree.
Rational mixed_difference(const Grid& values, const MultiIndex& alpha, const MultiIndex& beta);

enum class Verdict { pass, violation };
std::string_view to_string(Verdict v);

/// Which family of differences a certificate covers.
enum class CheckKind { joint, separate, one_dimensional };
std::string_view to_string(CheckKind k);

/// One failing entry: (-1)^{|beta|} Delta^beta x_alpha < 0. For 1-D checks
/// only the first component of alpha and beta is meaningful.
struct Violation {
  MultiIndex alpha;
  MultiIndex beta;
  Rational value;
};

/// Result of a finite-window complete-monotonicity check.
///
/// A violation is a rigorous proof that the net (or sequence) is not
/// completely monotone. A pass only says that no violation exists up to the
/// window; it never proves complete monotonicity.
struct DifferenceCertificate {
  CheckKind kind;
  Verdict verdict;
  /// First violation in (|beta|, beta, alpha) order.
  std::optional<Violation> witness;
  /// Every violation found, in the same order, truncated to the recording cap.
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  /// Extent checked: {M, N} for nets, {length - 1} for sequences.
  std::vector<std::size_t> extent;

  bool passed() const { return verdict == Verdict::pass; }
  /// Finds a recorded violation at (alpha, beta), if any.
  const Violation* find(const MultiIndex& alpha, const MultiIndex& beta) const;
};

struct CheckOptions {
  /// Worker threads used across difference orders; results do not depend on it.
  unsigned threads = 1;
  /// How many violations to keep in the certificate.
  std::size_t max_recorded = 4096;
};

/// Checks (-1)^{|beta|} Delta^beta (1/p)(alpha) >= 0 for every alpha + beta
/// inside the window.
DifferenceCertificate jcm_check(const TwoVarPoly& p, const Window& w, const CheckOptions& opts = {});
DifferenceCertificate jcm_check(const Grid& values, const CheckOptions& opts = {});

/// Same semantics restricted to beta = (k, 0) and beta = (0, k).
DifferenceCertificate separate_cm_check(const TwoVarPoly& p, const Window& w, const CheckOptions& opts = {});
DifferenceCertificate separate_cm_check(const Grid& values, const CheckOptions& opts = {});

/// Full triangular difference table of a sequence; requires length >= 2.
DifferenceCertificate cm_check_1d(std::span<const Rational> seq, const CheckOptions& opts = {});

}  // namespace jcm
