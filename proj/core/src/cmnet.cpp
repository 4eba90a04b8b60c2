#include "jcm/cmnet.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

#include "jcm/errors.hpp"

namespace jcm {

Window::Window(std::size_t M_, std::size_t N_) : M(M_), N(N_) {
  if (M < 1 || N < 1) throw DomainError("window extents must be at least 1");
}

Grid::Grid(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Grid sample_net(const TwoVarPoly& p, const Window& w) {
  Grid g(w.M + 1, w.N + 1);
  for (std::size_t m = 0; m <= w.M; ++m) {
    Rational bm = eval_factored(p.b(), Rational(static_cast<unsigned long>(m)));
    Rational am = eval_factored(p.a(), Rational(static_cast<unsigned long>(m)));
    for (std::size_t n = 0; n <= w.N; ++n) g.at(m, n) = 1 / (bm + am * static_cast<unsigned long>(n));
  }
  return g;
}

namespace {

void require_inside(const Grid& values, const MultiIndex& alpha, const MultiIndex& beta) {
  if (alpha[0] + beta[0] >= values.rows() || alpha[1] + beta[1] >= values.cols())
    throw IndexError("alpha + beta = (" + std::to_string(alpha[0] + beta[0]) + ", " + std::to_string(alpha[1] + beta[1]) +
                     ") lies outside a " + std::to_string(values.rows()) + "x" + std::to_string(values.cols()) + " grid");
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

bool is_violation(const Rational& diff, std::size_t order) {
  int s = sign(diff);
  return order % 2 == 0 ? s < 0 : s > 0;
}

bool before(const Violation& x, const Violation& y) {
  return std::tuple(x.beta[0] + x.beta[1], x.beta[0], x.beta[1], x.alpha[0], x.alpha[1]) <
         std::tuple(y.beta[0] + y.beta[1], y.beta[0], y.beta[1], y.alpha[0], y.alpha[1]);
}

/// Collects violations from independent work items and merges them in
/// canonical order.
struct Collector {
  std::vector<Violation> kept;
  std::size_t count = 0;
  std::size_t cap;

  explicit Collector(std::size_t cap_) : cap(cap_) {}
  void add(Violation v) {
    ++count;
    if (kept.size() < cap) kept.push_back(std::move(v));
  }
};

DifferenceCertificate finish(CheckKind kind, std::vector<Collector>& parts, std::size_t cap, std::vector<std::size_t> extent) {
  DifferenceCertificate cert{kind, Verdict::pass, std::nullopt, {}, 0, std::move(extent)};
  for (auto& part : parts) {
    cert.violation_count += part.count;
    for (auto& v : part.kept) cert.violations.push_back(std::move(v));
  }
  std::stable_sort(cert.violations.begin(), cert.violations.end(), before);
  if (cert.violations.size() > cap) cert.violations.resize(cap);
  if (cert.violation_count > 0) {
    cert.verdict = Verdict::violation;
    cert.witness = cert.violations.front();
  }
  return cert;
}

/// Runs task(i) for i in [0, n) on up to `threads` workers.
template <typename Task>
void parallel_for(std::size_t n, unsigned threads, Task&& task) {
  unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) task(i);
    });
}

/// Forward difference along the first index.
Grid diff_rows(const Grid& g) {
  Grid out(g.rows() - 1, g.cols());
  for (std::size_t i = 0; i + 1 < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out.at(i, j) = g.at(i + 1, j) - g.at(i, j);
  return out;
}

/// Forward difference along the second index.
Grid diff_cols(const Grid& g) {
  Grid out(g.rows(), g.cols() - 1);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j + 1 < g.cols(); ++j) out.at(i, j) = g.at(i, j + 1) - g.at(i, j);
  return out;
}

}  // namespace

Rational difference_iterated(const Grid& values, const MultiIndex& alpha, const MultiIndex& beta) {
  require_inside(values, alpha, beta);
  // Local block x_{alpha + gamma}, gamma <= beta, then difference in place.
  const std::size_t r = beta[0] + 1;
  const std::size_t c = beta[1] + 1;
  std::vector<Rational> block(r * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) block[i * c + j] = values.at(alpha[0] + i, alpha[1] + j);

  for (std::size_t step = 0; step < beta[0]; ++step)
    for (std::size_t i = 0; i + 1 + step < r; ++i)
      for (std::size_t j = 0; j < c; ++j) block[i * c + j] = block[(i + 1) * c + j] - block[i * c + j];
  for (std::size_t step = 0; step < beta[1]; ++step)
    for (std::size_t j = 0; j + 1 + step < c; ++j) block[j] = block[j + 1] - block[j];
  return block[0];
}

Rational difference_binomial(const Grid& values, const MultiIndex& alpha, const MultiIndex& beta) {
  require_inside(values, alpha, beta);
  Rational sum = 0;
  for (std::size_t g0 = 0; g0 <= beta[0]; ++g0) {
    Integer c0 = binomial(beta[0], g0);
    for (std::size_t g1 = 0; g1 <= beta[1]; ++g1) {
      Rational term = values.at(alpha[0] + g0, alpha[1] + g1) * Rational(c0 * binomial(beta[1], g1));
      if ((beta[0] + beta[1] - g0 - g1) % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
  }
  return sum;
}

Rational mixed_difference(const Grid& values, const MultiIndex& alpha, const MultiIndex& beta) {
  Rational iterated = difference_iterated(values, alpha, beta);
  Rational expanded = difference_binomial(values, alpha, beta);
  if (iterated != expanded)
    throw InternalError("difference routes disagree: iterated " + to_string(iterated) + " vs binomial " + to_string(expanded));
  return iterated;
}

std::string_view to_string(Verdict v) { return v == Verdict::pass ? "pass" : "violation"; }

std::string_view to_string(CheckKind k) {
  switch (k) {
    case CheckKind::joint:
      return "joint";
    case CheckKind::separate:
      return "separate";
    case CheckKind::one_dimensional:
      return "one_dimensional";
  }
  return "unknown";
}

const Violation* DifferenceCertificate::find(const MultiIndex& alpha, const MultiIndex& beta) const {
  for (const auto& v : violations)
    if (v.alpha == alpha && v.beta == beta) return &v;
  return nullptr;
}

DifferenceCertificate jcm_check(const TwoVarPoly& p, const Window& w, const CheckOptions& opts) {
  return jcm_check(sample_net(p, w), opts);
}

DifferenceCertificate jcm_check(const Grid& values, const CheckOptions& opts) {
  const std::size_t rows = values.rows();
  const std::size_t cols = values.cols();
  if (rows < 2 || cols < 2) throw DomainError("grid must be at least 2x2");

  // Delta_1^{b0} tables for every b0; Delta_2 orders are swept per table.
  std::vector<Grid> row_tables;
  row_tables.reserve(rows);
  row_tables.push_back(values);
  for (std::size_t b0 = 1; b0 < rows; ++b0) row_tables.push_back(diff_rows(row_tables.back()));

  std::vector<Collector> parts(rows, Collector(opts.max_recorded));
  parallel_for(rows, opts.threads, [&](std::size_t b0) {
    Grid table = row_tables[b0];
    for (std::size_t b1 = 0; b1 < cols; ++b1) {
      if (b1 > 0) table = diff_cols(table);
      for (std::size_t i = 0; i < table.rows(); ++i)
        for (std::size_t j = 0; j < table.cols(); ++j)
          if (is_violation(table.at(i, j), b0 + b1)) parts[b0].add({{i, j}, {b0, b1}, table.at(i, j)});
    }
  });
  return finish(CheckKind::joint, parts, opts.max_recorded, {rows - 1, cols - 1});
}

DifferenceCertificate separate_cm_check(const TwoVarPoly& p, const Window& w, const CheckOptions& opts) {
  return separate_cm_check(sample_net(p, w), opts);
}

DifferenceCertificate separate_cm_check(const Grid& values, const CheckOptions& opts) {
  const std::size_t rows = values.rows();
  const std::size_t cols = values.cols();
  if (rows < 2 || cols < 2) throw DomainError("grid must be at least 2x2");

  // Work items: one per column (differences in m), then one per row (in n).
  std::vector<Collector> parts(cols + rows, Collector(opts.max_recorded));
  parallel_for(cols + rows, opts.threads, [&](std::size_t item) {
    const bool along_m = item < cols;
    const std::size_t fixed = along_m ? item : item - cols;
    const std::size_t len = along_m ? rows : cols;
    std::vector<Rational> seq(len);
    for (std::size_t t = 0; t < len; ++t) seq[t] = along_m ? values.at(t, fixed) : values.at(fixed, t);
    for (std::size_t order = 0; order < len; ++order) {
      if (order > 0)
        for (std::size_t t = 0; t + order < len; ++t) seq[t] = seq[t + 1] - seq[t];
      for (std::size_t t = 0; t + order < len; ++t) {
        if (!is_violation(seq[t], order)) continue;
        MultiIndex alpha = along_m ? MultiIndex{t, fixed} : MultiIndex{fixed, t};
        MultiIndex beta = along_m ? MultiIndex{order, 0} : MultiIndex{0, order};
        parts[item].add({alpha, beta, seq[t]});
      }
    }
  });
  return finish(CheckKind::separate, parts, opts.max_recorded, {rows - 1, cols - 1});
}

DifferenceCertificate cm_check_1d(std::span<const Rational> seq, const CheckOptions& opts) {
  if (seq.size() < 2) throw DomainError("sequence needs at least two terms");
  std::vector<Collector> parts(1, Collector(opts.max_recorded));
  std::vector<Rational> work(seq.begin(), seq.end());
  for (std::size_t order = 0; order < work.size(); ++order) {
    if (order > 0)
      for (std::size_t t = 0; t + order < work.size(); ++t) work[t] = work[t + 1] - work[t];
    for (std::size_t t = 0; t + order < work.size(); ++t)
      if (is_violation(work[t], order)) parts[0].add({{t, 0}, {order, 0}, work[t]});
  }
  return finish(CheckKind::one_dimensional, parts, opts.max_recorded, {seq.size() - 1});
}

}  // namespace jcm
