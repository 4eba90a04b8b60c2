#include "jcm/sampling.hpp"

#include <algorithm>

#include "jcm/errors.hpp"

namespace jcm {

namespace {

std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi) {
  // Modulo draw keeps sequences identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

std::vector<Rational> distinct_draws(Rng& rng, std::size_t count, const SamplingRanges& r) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational v = random_positive(rng, r);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

Rational random_positive(Rng& rng, const SamplingRanges& r) {
  return make_rational(draw(rng, 1, r.max_numerator), draw(rng, 1, r.max_denominator));
}

TwoVarPoly random_interlacing(Rng& rng, std::size_t k, bool distinct_a, const SamplingRanges& r) {
  if (k < 1) throw DomainError("interlacing sample needs k >= 1");
  std::vector<Rational> chain;
  for (;;) {
    chain.clear();
    for (std::size_t i = 0; i < 2 * k - 1; ++i) chain.push_back(random_positive(rng, r));
    std::sort(chain.begin(), chain.end());
    if (!distinct_a) break;
    bool ok = true;
    for (std::size_t i = 1; i + 2 < chain.size(); i += 2)
      if (chain[i] == chain[i + 2]) ok = false;
    if (ok) break;
  }
  std::vector<Rational> b_roots;
  std::vector<Rational> a_roots;
  for (std::size_t i = 0; i < chain.size(); ++i) (i % 2 == 0 ? b_roots : a_roots).push_back(chain[i]);
  Rational b_lead(static_cast<long>(draw(rng, 1, r.max_lead)));
  Rational a_lead(static_cast<long>(draw(rng, 1, r.max_lead)));
  return TwoVarPoly(FactoredPoly(b_lead, std::move(b_roots)), FactoredPoly(a_lead, std::move(a_roots)));
}

TwoVarPoly random_one_below(Rng& rng, std::size_t k, const SamplingRanges& r) {
  if (k < 1) throw DomainError("sample needs k >= 1");
  std::vector<Rational> b_roots;
  for (std::size_t i = 0; i < k; ++i) b_roots.push_back(random_positive(rng, r));
  std::vector<Rational> a_roots = distinct_draws(rng, k - 1, r);
  Rational b_lead(static_cast<long>(draw(rng, 1, r.max_lead)));
  Rational a_lead(static_cast<long>(draw(rng, 1, r.max_lead)));
  return TwoVarPoly(FactoredPoly(b_lead, std::move(b_roots)), FactoredPoly(a_lead, std::move(a_roots)));
}

}  // namespace jcm
