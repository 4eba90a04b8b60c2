#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "jcm/cli/config.hpp"
#include "jcm/cli/run.hpp"
#include "jcm/cli/serialize.hpp"
#include "jcm/errors.hpp"

using jcm::FactoredPoly;
using jcm::Rational;
using jcm::TwoVarPoly;
using jcm::cli::Command;
using jcm::cli::JobConfig;
using jcm::cli::OutputFormat;
using nlohmann::json;

namespace {

JobConfig job(Command c, TwoVarPoly p) {
  JobConfig cfg;
  cfg.command = c;
  cfg.polynomial = std::move(p);
  return cfg;
}

TwoVarPoly interlaced_poly() { return TwoVarPoly(FactoredPoly(1, {1, 3}), FactoredPoly(1, {2})); }
TwoVarPoly cube_poly() { return TwoVarPoly(FactoredPoly(1, {9, 9, 9}), FactoredPoly(1, {1})); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Config, SampleFileParses) {
  auto cfg = jcm::cli::parse_config_text(slurp(JCM_SAMPLE_CONFIG_DIR "/interlaced.json"));
  EXPECT_EQ(cfg.command, Command::check_jcm);
  ASSERT_TRUE(cfg.polynomial.has_value());
  EXPECT_EQ(*cfg.polynomial, interlaced_poly());
  EXPECT_EQ(cfg.window, jcm::Window(12, 12));
  EXPECT_EQ(cfg.output, OutputFormat::json);
  EXPECT_EQ(cfg.seed, 7u);
}

TEST(Config, RoundTripsRandomJobs) {
  gen::Rng rng(101);
  const Command commands[] = {Command::check_jcm,      Command::criteria,    Command::decompose,
                              Command::verify_moments, Command::scan_family, Command::shift_report};
  for (int trial = 0; trial < 50; ++trial) {
    JobConfig cfg;
    cfg.command = commands[trial % 6];
    cfg.polynomial = TwoVarPoly(FactoredPoly(gen::positive(rng), gen::positives(rng, 3)),
                                FactoredPoly(gen::positive(rng), gen::positives(rng, 2)));
    cfg.window = jcm::Window(gen::uniform(rng, 1, 30), gen::uniform(rng, 1, 30));
    cfg.tolerances["tol"] = 1e-9;
    cfg.output = static_cast<OutputFormat>(trial % 3);
    cfg.seed = static_cast<std::uint64_t>(gen::uniform(rng, 0, 1 << 30));
    cfg.threads = gen::uniform(rng, 1, 8);
    cfg.t_grid = {0.25, 0.75};
    cfg.grid = {Rational(1, 3), 5};
    if (trial % 2) {
      cfg.family = 2;
      cfg.from = 8;
      cfg.to = 9;
      cfg.step = Rational(1, 4);
      cfg.n = 3;
      cfg.length = 40;
      cfg.out = "report.txt";
    }
    auto text = jcm::cli::config_to_json(cfg).dump();
    EXPECT_EQ(jcm::cli::parse_config_text(text), cfg);
  }
}

TEST(Config, ErrorsNamePositionOrField) {
  try {
    jcm::cli::parse_config_text("{\n  \"command\": \"check-jcm\",\n  \"window\": [2, 2\n}");
    FAIL();
  } catch (const jcm::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos) << e.what();
  }
  try {
    jcm::cli::parse_config_text(R"({"command": "check-jcm", "polynomial": {"b": {"roots": ["1/0"]}, "a": {}}})");
    FAIL();
  } catch (const jcm::ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("polynomial.b.roots[0]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(jcm::cli::parse_config_text(R"({"command": "check-jcm", "colour": 1})"), jcm::ParseError);
  EXPECT_THROW(jcm::cli::parse_config_text(R"({"command": "frobnicate"})"), jcm::ParseError);
  EXPECT_THROW(jcm::cli::parse_config_text(R"({"command": "check-jcm", "window": [0, 3]})"), jcm::ParseError);
}

TEST(Config, WindowAndListParsing) {
  EXPECT_EQ(jcm::cli::parse_window("12x7"), jcm::Window(12, 7));
  EXPECT_EQ(jcm::cli::parse_window("5"), jcm::Window(5, 5));
  EXPECT_THROW(jcm::cli::parse_window("3y4"), jcm::ParseError);
  EXPECT_EQ(jcm::cli::parse_rational_list("1, 3/2,4.5"), (std::vector<Rational>{1, Rational(3, 2), Rational(9, 2)}));
  EXPECT_EQ(jcm::cli::parse_double_list("0.1,0.5"), (std::vector<double>{0.1, 0.5}));
}

TEST(Run, ExitCodes) {
  std::ostringstream out, err;
  auto pass = job(Command::check_jcm, interlaced_poly());
  pass.window = jcm::Window(12, 12);
  EXPECT_EQ(jcm::cli::run(pass, out, err), jcm::cli::exit_ok);

  auto fail = job(Command::check_jcm, cube_poly());
  fail.window = jcm::Window(2, 2);
  fail.output = OutputFormat::json;
  std::ostringstream witness;
  EXPECT_EQ(jcm::cli::run(fail, witness, err), jcm::cli::exit_violation);
  auto j = json::parse(witness.str());
  EXPECT_EQ(j.at("verdict"), "violation");
  EXPECT_TRUE(j.contains("witness"));

  JobConfig missing;
  missing.command = Command::check_jcm;
  EXPECT_EQ(jcm::cli::run(missing, out, err), jcm::cli::exit_error);
}

TEST(Run, DeterministicOutput) {
  auto cfg = job(Command::check_jcm, cube_poly());
  cfg.window = jcm::Window(4, 4);
  cfg.output = OutputFormat::json;
  std::ostringstream a, b, err;
  jcm::cli::run(cfg, a, err);
  cfg.threads = 4;
  jcm::cli::run(cfg, b, err);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Run, CertificateJsonRoundTrip) {
  auto cert = jcm::jcm_check(cube_poly(), jcm::Window(3, 3));
  auto back = jcm::cli::certificate_from_json(jcm::cli::to_json(cert));
  EXPECT_EQ(back.verdict, cert.verdict);
  EXPECT_EQ(back.violation_count, cert.violation_count);
  ASSERT_EQ(back.violations.size(), cert.violations.size());
  for (std::size_t i = 0; i < cert.violations.size(); ++i) EXPECT_EQ(back.violations[i].value, cert.violations[i].value);
}

TEST(Run, OtherCommands) {
  std::ostringstream err;
  {
    std::ostringstream out;
    auto cfg = job(Command::decompose, interlaced_poly());
    cfg.output = OutputFormat::json;
    EXPECT_EQ(jcm::cli::run(cfg, out, err), jcm::cli::exit_ok);
    auto j = json::parse(out.str());
    EXPECT_EQ(j.at("c0"), "1");
    EXPECT_EQ(j.at("c"), "2");
  }
  {
    std::ostringstream out;
    auto cfg = job(Command::criteria, interlaced_poly());
    cfg.output = OutputFormat::json;
    EXPECT_EQ(jcm::cli::run(cfg, out, err), jcm::cli::exit_ok);
    EXPECT_NE(out.str().find("not_applicable"), std::string::npos);
  }
  {
    std::ostringstream out;
    auto cfg = job(Command::verify_moments, interlaced_poly());
    cfg.output = OutputFormat::csv;
    cfg.window = jcm::Window(3, 3);
    EXPECT_EQ(jcm::cli::run(cfg, out, err), jcm::cli::exit_ok);
    EXPECT_EQ(out.str().rfind("residue,t,m,target,computed,abs_error\n", 0), 0u);
  }
  {
    std::ostringstream out;
    JobConfig cfg;
    cfg.command = Command::scan_family;
    cfg.family = 2;
    cfg.from = 8;
    cfg.to = 9;
    cfg.step = 1;
    cfg.window = jcm::Window(2, 2);
    cfg.output = OutputFormat::csv;
    EXPECT_EQ(jcm::cli::run(cfg, out, err), jcm::cli::exit_violation);
    EXPECT_NE(out.str().find("9,-,violation"), std::string::npos) << out.str();
  }
  {
    std::ostringstream out;
    auto cfg = job(Command::shift_report, interlaced_poly());
    cfg.n = 1;
    cfg.length = 100;
    cfg.output = OutputFormat::json;
    EXPECT_EQ(jcm::cli::run(cfg, out, err), jcm::cli::exit_ok);
    EXPECT_EQ(json::parse(out.str()).at("norm_z_sq"), "5/11");
  }
}

TEST(Run, WritesToOutFile) {
  auto path = std::filesystem::temp_directory_path() / "jcm_cli_test_out.txt";
  std::filesystem::remove(path);
  auto cfg = job(Command::decompose, interlaced_poly());
  cfg.out = path.string();
  std::ostringstream out, err;
  EXPECT_EQ(jcm::cli::run(cfg, out, err), jcm::cli::exit_ok);
  EXPECT_TRUE(out.str().empty());
  EXPECT_NE(slurp(path.string()).find("c0 = 1"), std::string::npos);
  std::filesystem::remove(path);
}
