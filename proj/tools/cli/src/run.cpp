#include "jcm/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "jcm/cli/serialize.hpp"
#include "jcm/counterex.hpp"
#include "jcm/criteria.hpp"
#include "jcm/decomp.hpp"
#include "jcm/errors.hpp"
#include "jcm/moments.hpp"
#include "jcm/shifts.hpp"

namespace jcm::cli {

using nlohmann::json;

namespace {

const TwoVarPoly& require_polynomial(const JobConfig& cfg) {
  if (!cfg.polynomial) throw ParseError(std::string(to_string(cfg.command)) + " needs a polynomial");
  return *cfg.polynomial;
}

double tolerance(const JobConfig& cfg, const std::string& key, double fallback) {
  auto it = cfg.tolerances.find(key);
  return it == cfg.tolerances.end() ? fallback : it->second;
}

std::string index_pair(const MultiIndex& idx) {
  return "(" + std::to_string(idx[0]) + ", " + std::to_string(idx[1]) + ")";
}

std::string describe_poly(const FactoredPoly& f) {
  std::string s = jcm::to_string(f.lead());
  for (const auto& r : f.roots()) s += "(x+" + jcm::to_string(r) + ")";
  return s;
}

int check_jcm(const JobConfig& cfg, std::ostream& out) {
  const auto& p = require_polynomial(cfg);
  const Window w = cfg.window.value_or(Window(20, 20));
  auto cert = jcm_check(p, w, CheckOptions{cfg.threads, 4096});
  if (cfg.output == OutputFormat::json) {
    out << to_json(cert).dump(2) << "\n";
  } else {
    out << "p(x,y) = " << describe_poly(p.b()) << " + " << describe_poly(p.a()) << " y\n";
    out << "window: " << w.M << "x" << w.N << " (" << (w.M + 1) * (w.N + 1) << " values)\n";
    if (cert.passed()) {
      out << "verdict: no violation up to window (evidence only, not a proof of joint complete monotonicity)\n";
    } else {
      const auto& v = *cert.witness;
      out << "verdict: violation, the net is not jointly completely monotone\n";
      out << "witness: alpha=" << index_pair(v.alpha) << " beta=" << index_pair(v.beta)
          << " value=" << jcm::to_string(v.value) << "\n";
      out << "violations in window: " << cert.violation_count << "\n";
    }
  }
  return cert.passed() ? exit_ok : exit_violation;
}

int criteria(const JobConfig& cfg, std::ostream& out) {
  const auto& p = require_polynomial(cfg);
  std::vector<Rational> grid = cfg.grid;
  if (grid.empty())
    for (long x = 0; x <= 20; ++x) grid.emplace_back(x);
  auto rep = evaluate_criteria(p, grid);
  if (cfg.output == OutputFormat::json) {
    out << to_json(rep).dump(2) << "\n";
    return exit_ok;
  }
  auto row = [&](std::string_view name, std::string_view value) {
    out << std::left << std::setw(34) << name << value << "\n";
  };
  row("interlacing (l = k)", to_string(rep.interlacing_lk));
  row("interlacing (l = k-1)", to_string(rep.interlacing_l_km1));
  row("sum 1/a_j <= sum 1/b_j", rep.reciprocal_sum_necessary ? "holds" : "fails");
  auto gated_text = [](const GatedCondition& g) {
    if (!g.applicable) return std::string("not_applicable (l < k; inequality ") + (g.holds ? "holds)" : "fails)");
    return std::string(g.holds ? "holds" : "fails");
  };
  row("prod b_j <= prod a_j", gated_text(rep.product_necessary));
  row("sum b_j <= sum a_j", gated_text(rep.sum_necessary));
  row("a'b <= ab' on grid", rep.derivative_inequality_grid ? "holds" : "fails");
  row("deg a <= deg b", rep.degree_condition ? "holds" : "fails");
  if (rep.exact_21) row("(2,1) classification", to_string(*rep.exact_21));
  return exit_ok;
}

int decompose(const JobConfig& cfg, std::ostream& out) {
  const auto& p = require_polynomial(cfg);
  if (p.a().degree() + 1 == p.b().degree()) {
    auto d = partial_fraction_decompose(p.b(), p.a());
    auto check = reconstruct_and_verify(d, p.b(), p.a());
    if (cfg.output == OutputFormat::json) {
      json j = to_json(d);
      j["identity_verified"] = check.holds;
      out << j.dump(2) << "\n";
    } else {
      out << "b(x)/a(x) = c0 (x + c + sum_i A_i/(x + a_i))\n";
      out << "c0 = " << jcm::to_string(d.c0) << "\n";
      out << "c  = " << jcm::to_string(d.c) << "\n";
      for (std::size_t i = 0; i < d.residues.size(); ++i)
        out << "A_" << i + 1 << " = " << jcm::to_string(d.residues[i].value) << "  (a_" << i + 1
            << " = " << jcm::to_string(d.residues[i].root) << ")\n";
      out << "interlacing: " << to_string(d.regime) << "\n";
      out << "identity b(x) = c0((x+c)a(x) + sum A_i a(x)/(x+a_i)): " << (check.holds ? "verified" : "FAILED") << "\n";
    }
    return check.holds ? exit_ok : exit_error;
  }
  auto d = quotient_residue_decompose(p.b(), p.a());
  auto check = reconstruct_and_verify(d, p.b(), p.a());
  if (cfg.output == OutputFormat::json) {
    json j = to_json(d);
    j["identity_verified"] = check.holds;
    out << j.dump(2) << "\n";
  } else {
    out << "b(x) = q(x) a(x) + sum_i r_i a(x)/(x + a_i)\n";
    out << "q coefficients (ascending):";
    for (const auto& c : d.quotient.coeffs()) out << " " << jcm::to_string(c);
    out << "\n";
    for (std::size_t i = 0; i < d.residues.size(); ++i)
      out << "r_" << i + 1 << " = " << jcm::to_string(d.residues[i].value) << "  (a_" << i + 1
          << " = " << jcm::to_string(d.residues[i].root) << ")\n";
    out << "identity: " << (check.holds ? "verified" : "FAILED") << "\n";
  }
  return check.holds ? exit_ok : exit_error;
}

int verify_moments(const JobConfig& cfg, std::ostream& out) {
  const auto& p = require_polynomial(cfg);
  auto d = partial_fraction_decompose(p.b(), p.a());
  const double tol = tolerance(cfg, "tol", 1e-8);
  const double quad_tol = tolerance(cfg, "quadrature", tol / 100);
  std::vector<double> ts = cfg.t_grid.empty() ? std::vector<double>{0.1, 0.5, 0.9} : cfg.t_grid;
  const std::size_t max_m = cfg.window ? cfg.window->M : 10;

  bool ok = true;
  json rows = json::array();
  std::ostringstream csv;
  csv << "residue,t,m,target,computed,abs_error\n";
  for (std::size_t i = 0; i < d.residues.size(); ++i) {
    for (double t : ts) {
      WeightParams wp(d.residues[i].value, d.residues[i].root, t);
      for (std::size_t m = 0; m <= max_m; ++m) {
        const double target = measure_moment_target(wp, static_cast<unsigned>(m));
        const auto got = measure_moment(wp, static_cast<unsigned>(m), quad_tol);
        const double err = std::abs(got.value - target);
        ok = ok && err <= tol * std::max(1.0, std::abs(target));
        csv << i + 1 << "," << format_double(t) << "," << m << "," << format_double(target) << ","
            << format_double(got.value) << "," << format_double(err) << "\n";
        rows.push_back({{"residue", i + 1},
                        {"t", t},
                        {"m", m},
                        {"target", target},
                        {"computed", got.value},
                        {"abs_error", err},
                        {"error_bound", got.error_bound}});
      }
    }
  }
  if (cfg.output == OutputFormat::json)
    out << json{{"tol", tol}, {"pass", ok}, {"rows", rows}}.dump(2) << "\n";
  else
    out << csv.str();
  if (!ok) throw AccuracyError("measure moments missed the tolerance " + format_double(tol));
  return exit_ok;
}

int scan_family(const JobConfig& cfg, std::ostream& out) {
  if (!cfg.family) throw ParseError("scan-family needs --family 1|2");
  const Family f = *cfg.family == 1 ? Family::family1 : Family::family2;
  if (!cfg.from || !cfg.to || !cfg.step) throw ParseError("scan-family needs --from, --to and --step");
  if (*cfg.step <= 0) throw ParseError("scan-family step must be positive");
  std::vector<Rational> bs;
  for (Rational b = *cfg.from; b <= *cfg.to; b += *cfg.step) bs.push_back(b);
  auto rows = family_scan(f, bs, cfg.window, CheckOptions{cfg.threads, 16});

  bool found = false;
  if (cfg.output == OutputFormat::json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json j{{"b", jcm::to_string(r.b)}, {"condition_value", jcm::to_string(r.condition_value)}, {"sign", r.condition_sign}};
      if (r.window_certificate) {
        j["window_verdict"] = to_string(r.window_certificate->verdict);
        found = found || !r.window_certificate->passed();
      }
      arr.push_back(j);
    }
    out << json{{"family", to_string(f)}, {"description", describe(f)}, {"rows", arr}}.dump(2) << "\n";
  } else {
    out << "b,condition_value_sign,window_verdict\n";
    for (const auto& r : rows) {
      out << jcm::to_string(r.b) << "," << (r.condition_sign < 0 ? "-" : r.condition_sign > 0 ? "+" : "0") << ",";
      if (r.window_certificate) {
        out << to_string(r.window_certificate->verdict);
        found = found || !r.window_certificate->passed();
      }
      out << "\n";
    }
  }
  return found ? exit_violation : exit_ok;
}

int shift_report(const JobConfig& cfg, std::ostream& out) {
  const auto& p = require_polynomial(cfg);
  const std::size_t n = cfg.n.value_or(1);
  const std::size_t M = cfg.length.value_or(1000);
  if (M < 10) throw ParseError("shift-report needs --length >= 10");
  auto prof = build_profile(p, n, M);
  auto sub = subnormal_contraction_check(prof, 30);
  auto ess = essential_normality_report(prof);

  if (cfg.output == OutputFormat::json) {
    out << to_json(prof, sub, ess).dump(2) << "\n";
  } else if (cfg.output == OutputFormat::csv) {
    out << "m,alpha_sq,d_m\n";
    for (std::size_t m = 0; m < prof.length; ++m)
      out << m << "," << format_double(jcm::to_double(prof.alpha_sq[m])) << ","
          << format_double(jcm::to_double(prof.commutator_diag[m])) << "\n";
  } else {
    out << "n = " << n << ", M = " << M << "\n";
    out << "||z||^2 = beta_1/beta_0 = " << jcm::to_string(prof.norm_z_sq)
        << "  (||z|| = " << format_double(std::sqrt(jcm::to_double(prof.norm_z_sq))) << ")\n";
    out << "contraction: " << (sub.contraction ? "yes" : "no") << "\n";
    out << "beta prefix CM (" << sub.cm.extent[0] + 1 << " terms): " << to_string(sub.cm.verdict) << "\n";
    out << "tail max |d_m|: " << format_double(ess.tail_max) << "\n";
    out << "decay exponent: " << (ess.decay_exponent ? format_double(*ess.decay_exponent) : "undefined") << "\n";
    out << "spectral radius estimate: " << format_double(prof.spectral_radius_est) << " (reference 1)\n";
  }
  return sub.cm.passed() ? exit_ok : exit_violation;
}

int dispatch(const JobConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::check_jcm:
      return check_jcm(cfg, out);
    case Command::criteria:
      return criteria(cfg, out);
    case Command::decompose:
      return decompose(cfg, out);
    case Command::verify_moments:
      return verify_moments(cfg, out);
    case Command::scan_family:
      return scan_family(cfg, out);
    case Command::shift_report:
      return shift_report(cfg, out);
  }
  return exit_error;
}

}  // namespace

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.out) {
      std::ofstream file(*cfg.out);
      if (!file) throw ParseError("cannot open output file " + *cfg.out);
      return dispatch(cfg, file);
    }
    return dispatch(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }
}

}  // namespace jcm::cli
