#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "jcm/cmnet.hpp"
#include "jcm/poly.hpp"

namespace jcm::cli {

enum class Command { check_jcm, criteria, decompose, verify_moments, scan_family, shift_report };
enum class OutputFormat { text, json, csv };

std::string_view to_string(Command c);
std::string_view to_string(OutputFormat f);
Command parse_command(std::string_view s);
OutputFormat parse_output(std::string_view s);

/// One fully-specified job. Rationals are kept exact; unknown JSON fields are
/// rejected on load.
struct JobConfig {
  Command command = Command::check_jcm;
  std::optional<TwoVarPoly> polynomial;
  std::optional<Window> window;
  /// Recognised keys: "tol" (pass threshold), "quadrature", "bisect".
  std::map<std::string, double> tolerances;
  OutputFormat output = OutputFormat::text;
  std::uint64_t seed = 0;
  unsigned threads = 1;

  std::optional<std::size_t> n;
  std::optional<std::size_t> length;
  std::vector<double> t_grid;
  std::optional<int> family;
  std::optional<Rational> from;
  std::optional<Rational> to;
  std::optional<Rational> step;
  std::vector<Rational> grid;
  std::optional<std::string> out;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

/// {"lead": "p/q", "roots": ["p/q", ...]}
FactoredPoly parse_factored(const nlohmann::json& j, const std::string& path = "poly");
nlohmann::json factored_to_json(const FactoredPoly& f);

/// {"b": {...}, "a": {...}}; no degree relation is enforced.
TwoVarPoly parse_polynomial(const nlohmann::json& j, const std::string& path = "polynomial");
nlohmann::json polynomial_to_json(const TwoVarPoly& p);

/// Parses a window literal "MxN" or "M" (square).
Window parse_window(std::string_view text);

JobConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const JobConfig& cfg);

/// Parses config text; syntax errors are reported as ParseError with
/// "line L, column C" and field errors with their JSON path.
JobConfig parse_config_text(std::string_view text);

/// Comma-separated rationals, e.g. "1,3/2,4.5".
std::vector<Rational> parse_rational_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);

}  // namespace jcm::cli
