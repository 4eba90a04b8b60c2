// jcmcheck: command-line front end for the joint complete monotonicity toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jcm/cli/config.hpp"
#include "jcm/cli/run.hpp"
#include "jcm/errors.hpp"

namespace {

using jcm::cli::JobConfig;

constexpr const char* csv_help = R"(CSV outputs:
  verify-moments  residue,t,m,target,computed,abs_error
  scan-family     b,condition_value_sign,window_verdict
  shift-report    m,alpha_sq,d_m   (with --output csv)
Exit codes: 0 no violation / all checks passed, 2 violation certificate produced,
1 usage, parse or accuracy error.)";

struct PolyFlags {
  std::string b_lead = "1";
  std::string b_roots;
  std::string a_lead = "1";
  std::string a_roots;
  std::string literal;
};

void add_poly_flags(CLI::App* cmd, PolyFlags& f) {
  cmd->add_option("--b-lead", f.b_lead, "leading coefficient of b (p/q or decimal)");
  cmd->add_option("--b-roots", f.b_roots, "comma-separated shifts r_j of b(x) = lead prod (x + r_j)");
  cmd->add_option("--a-lead", f.a_lead, "leading coefficient of a");
  cmd->add_option("--a-roots", f.a_roots, "comma-separated shifts of a (empty for a constant)");
  cmd->add_option("--poly", f.literal, R"(JSON literal {"b": {"lead": .., "roots": [..]}, "a": {..}})");
}

std::optional<jcm::TwoVarPoly> build_poly(const PolyFlags& f) {
  if (!f.literal.empty()) return jcm::cli::parse_polynomial(nlohmann::json::parse(f.literal));
  if (f.b_roots.empty()) return std::nullopt;
  return jcm::TwoVarPoly(jcm::FactoredPoly(jcm::parse_rational(f.b_lead), jcm::cli::parse_rational_list(f.b_roots)),
                         jcm::FactoredPoly(jcm::parse_rational(f.a_lead), jcm::cli::parse_rational_list(f.a_roots)),
                         jcm::DegreeRule::any);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw jcm::ParseError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-window and closed-form checks of joint complete monotonicity for nets 1/p(m,n)"};
  app.footer(csv_help);
  app.require_subcommand(1);

  PolyFlags poly;
  std::string window_text;
  std::string output = "text";
  std::string out_path;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool dump_config = false;

  auto common = [&](CLI::App* cmd) {
    add_poly_flags(cmd, poly);
    cmd->add_option("--output", output, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", out_path, "write the report to this file instead of stdout");
    cmd->add_option("--seed", seed, "seed recorded with the job");
    cmd->add_option("--threads", threads, "worker threads for window checks");
    cmd->add_flag("--dump-config", dump_config, "print the job as a JSON config and exit");
  };

  auto* check = app.add_subcommand("check-jcm", "exact finite-window joint CM check of 1/p(m,n)");
  common(check);
  check->add_option("--window", window_text, "MxN (default 20x20)");

  auto* crit = app.add_subcommand("criteria", "closed-form sufficient and necessary conditions");
  common(crit);
  std::string grid_text;
  crit->add_option("--grid", grid_text, "x points for the a'b <= ab' check (default 0..20)");

  auto* dec = app.add_subcommand("decompose", "partial fractions of b(x)/a(x) with identity check");
  common(dec);

  auto* mom = app.add_subcommand("verify-moments", "quadrature check of the residue measures' moments");
  common(mom);
  double tol = 1e-8;
  std::string t_grid_text;
  mom->add_option("--tol", tol, "pass threshold on |computed - target|");
  mom->add_option("--t-grid", t_grid_text, "comma-separated t values in (0,1) (default 0.1,0.5,0.9)");
  mom->add_option("--window", window_text, "moments m = 0..M (default 10)");

  auto* scan = app.add_subcommand("scan-family", "sign scan of a counterexample family's condition");
  common(scan);
  int family = 0;
  std::string from_text, to_text, step_text;
  scan->add_option("--family", family, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  scan->add_option("--from", from_text, "first b")->required();
  scan->add_option("--to", to_text, "last b")->required();
  scan->add_option("--step", step_text, "b increment")->required();
  scan->add_option("--window", window_text, "also run the window check (MxN)");

  auto* shift = app.add_subcommand("shift-report", "weighted shift built from beta_m = 1/p(m,n)");
  common(shift);
  std::size_t n = 1;
  std::size_t length = 1000;
  shift->add_option("--n", n, "fixed second index");
  shift->add_option("--length", length, "number of weights M");

  auto* run_cfg = app.add_subcommand("run", "execute a JSON job config");
  std::string config_path;
  run_cfg->add_option("--config", config_path, "job config file")->required();

  auto* repro = app.add_subcommand("reproduce", "regenerate every reproduced claim into a directory");
  std::string outdir;
  std::uint64_t repro_seed = 0;
  repro->add_option("--out", outdir, "output directory (default $JCM_OUTPUT_DIR or ./jcm-reproduce)");
  repro->add_option("--seed", repro_seed, "seed for the sampled suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (repro->parsed()) {
      if (outdir.empty()) {
        const char* env = std::getenv("JCM_OUTPUT_DIR");
        outdir = env && *env ? env : "jcm-reproduce";
      }
      return jcm::cli::reproduce_claims(outdir, repro_seed, std::cout);
    }

    JobConfig cfg;
    if (run_cfg->parsed()) {
      cfg = jcm::cli::parse_config_text(read_file(config_path));
    } else {
      CLI::App* used = app.get_subcommands().front();
      cfg.command = jcm::cli::parse_command(used->get_name());
      cfg.polynomial = build_poly(poly);
      if (!window_text.empty()) cfg.window = jcm::cli::parse_window(window_text);
      cfg.output = jcm::cli::parse_output(output);
      cfg.seed = seed;
      cfg.threads = threads;
      if (!out_path.empty()) cfg.out = out_path;
      if (used == crit && !grid_text.empty()) cfg.grid = jcm::cli::parse_rational_list(grid_text);
      if (used == mom) {
        cfg.tolerances["tol"] = tol;
        if (!t_grid_text.empty()) cfg.t_grid = jcm::cli::parse_double_list(t_grid_text);
      }
      if (used == scan) {
        cfg.family = family;
        cfg.from = jcm::parse_rational(from_text);
        cfg.to = jcm::parse_rational(to_text);
        cfg.step = jcm::parse_rational(step_text);
      }
      if (used == shift) {
        cfg.n = n;
        cfg.length = length;
      }
    }
    if (dump_config) {
      std::cout << jcm::cli::config_to_json(cfg).dump(2) << "\n";
      return jcm::cli::exit_ok;
    }
    return jcm::cli::run(cfg, std::cout, std::cerr);
  } catch (const jcm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return jcm::cli::exit_error;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return jcm::cli::exit_error;
  }
}
