#include "jcm/cli/serialize.hpp"

#include <charconv>
#include <cmath>

#include "jcm/errors.hpp"

namespace jcm::cli {

using nlohmann::json;

namespace {

json violation_json(const Violation& v, CheckKind kind) {
  if (kind == CheckKind::one_dimensional)
    return {{"alpha", {v.alpha[0]}}, {"beta", {v.beta[0]}}, {"value", jcm::to_string(v.value)}};
  return {{"alpha", {v.alpha[0], v.alpha[1]}}, {"beta", {v.beta[0], v.beta[1]}}, {"value", jcm::to_string(v.value)}};
}

Violation violation_from_json(const json& j) {
  Violation v{{0, 0}, {0, 0}, 0};
  const auto& alpha = j.at("alpha");
  const auto& beta = j.at("beta");
  for (std::size_t i = 0; i < alpha.size() && i < 2; ++i) v.alpha[i] = alpha[i].get<std::size_t>();
  for (std::size_t i = 0; i < beta.size() && i < 2; ++i) v.beta[i] = beta[i].get<std::size_t>();
  v.value = parse_rational(j.at("value").get<std::string>());
  return v;
}

json rational_list(std::span<const Rational> xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(jcm::to_string(x));
  return arr;
}

json gated(const GatedCondition& g) {
  return {{"applicable", g.applicable},
          {"holds", g.holds},
          {"state", to_string(g.state())},
          {"lhs", jcm::to_string(g.lhs)},
          {"rhs", jcm::to_string(g.rhs)}};
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

json to_json(const DifferenceCertificate& cert) {
  json j;
  j["kind"] = to_string(cert.kind);
  j["verdict"] = to_string(cert.verdict);
  j["semantics"] = cert.passed() ? "no violation up to window (evidence only)"
                                 : "violation certificate: not completely monotone";
  j["window"] = cert.extent;
  j["witness"] = cert.witness ? violation_json(*cert.witness, cert.kind) : json(nullptr);
  j["violation_count"] = cert.violation_count;
  json all = json::array();
  for (const auto& v : cert.violations) all.push_back(violation_json(v, cert.kind));
  j["violations"] = all;
  return j;
}

DifferenceCertificate certificate_from_json(const json& j) {
  DifferenceCertificate cert{CheckKind::joint, Verdict::pass, std::nullopt, {}, 0, {}};
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "separate")
    cert.kind = CheckKind::separate;
  else if (kind == "one_dimensional")
    cert.kind = CheckKind::one_dimensional;
  else if (kind != "joint")
    throw ParseError("unknown certificate kind '" + kind + "'");
  cert.verdict = j.at("verdict").get<std::string>() == "pass" ? Verdict::pass : Verdict::violation;
  cert.extent = j.at("window").get<std::vector<std::size_t>>();
  if (!j.at("witness").is_null()) cert.witness = violation_from_json(j.at("witness"));
  cert.violation_count = j.value("violation_count", std::size_t{0});
  if (j.contains("violations"))
    for (const auto& v : j.at("violations")) cert.violations.push_back(violation_from_json(v));
  return cert;
}

json to_json(const PartialFraction& d) {
  json residues = json::array();
  for (const auto& r : d.residues) residues.push_back({{"root", jcm::to_string(r.root)}, {"A", jcm::to_string(r.value)}});
  return {{"c0", jcm::to_string(d.c0)},
          {"c", jcm::to_string(d.c)},
          {"residues", residues},
          {"interlacing", to_string(d.regime)}};
}

json to_json(const QuotientResidue& d) {
  json residues = json::array();
  for (const auto& r : d.residues)
    residues.push_back({{"root", jcm::to_string(r.root)}, {"value", jcm::to_string(r.value)}});
  return {{"quotient", rational_list(d.quotient.coeffs())}, {"residues", residues}};
}

json to_json(const CriteriaReport& r) {
  json j;
  j["interlacing_lk"] = to_string(r.interlacing_lk);
  j["interlacing_l_km1"] = to_string(r.interlacing_l_km1);
  j["reciprocal_sum_necessary"] = {{"holds", r.reciprocal_sum_necessary},
                                   {"sum_inv_a", jcm::to_string(r.reciprocal_a)},
                                   {"sum_inv_b", jcm::to_string(r.reciprocal_b)}};
  j["product_necessary"] = gated(r.product_necessary);
  j["sum_necessary"] = gated(r.sum_necessary);
  j["derivative_inequality_grid"] = r.derivative_inequality_grid;
  j["derivative_failure"] = r.derivative_failure ? json(jcm::to_string(*r.derivative_failure)) : json(nullptr);
  j["degree_condition"] = r.degree_condition;
  j["exact_21"] = r.exact_21 ? json(to_string(*r.exact_21)) : json(nullptr);
  j["note"] = "necessary conditions can rule JCM out; they never establish it";
  return j;
}

json to_json(const Bracket& b) {
  return {{"lo", jcm::to_string(b.lo)},
          {"hi", jcm::to_string(b.hi)},
          {"lo_decimal", format_double(jcm::to_double(b.lo))},
          {"hi_decimal", format_double(jcm::to_double(b.hi))}};
}

json to_json(const ShiftProfile& prof, const SubnormalReport& sub, const EssentialNormalityReport& ess) {
  json j;
  j["n"] = prof.n;
  j["length"] = prof.length;
  j["beta"] = rational_list(prof.beta);
  j["alpha_sq"] = rational_list(prof.alpha_sq);
  j["gamma_sq"] = rational_list(prof.gamma_sq);
  j["commutator_diag"] = rational_list(prof.commutator_diag);
  j["norm_z_sq"] = jcm::to_string(prof.norm_z_sq);
  j["norm_z"] = format_double(std::sqrt(jcm::to_double(prof.norm_z_sq)));
  j["spectral_radius_est"] = format_double(prof.spectral_radius_est);
  j["spectral_radius_reference"] = 1;
  j["contraction"] = sub.contraction;
  j["first_expansive"] = sub.first_expansive ? json(*sub.first_expansive) : json(nullptr);
  j["beta_cm"] = to_json(sub.cm);
  j["essential_normality"] = {
      {"tail_max_abs_d", format_double(ess.tail_max)},
      {"decay_exponent", ess.decay_exponent ? json(format_double(*ess.decay_exponent)) : json(nullptr)},
      {"exactly_normal_tail", ess.exactly_normal_tail},
      {"telescopes", ess.telescopes}};
  return j;
}

}  // namespace jcm::cli
