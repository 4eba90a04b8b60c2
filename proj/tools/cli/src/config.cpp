#include "jcm/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "jcm/errors.hpp"

namespace jcm::cli {

using nlohmann::json;

std::string_view to_string(Command c) {
  switch (c) {
    case Command::check_jcm:
      return "check-jcm";
    case Command::criteria:
      return "criteria";
    case Command::decompose:
      return "decompose";
    case Command::verify_moments:
      return "verify-moments";
    case Command::scan_family:
      return "scan-family";
    case Command::shift_report:
      return "shift-report";
  }
  return "check-jcm";
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text:
      return "text";
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
  }
  return "text";
}

Command parse_command(std::string_view s) {
  for (auto c : {Command::check_jcm, Command::criteria, Command::decompose, Command::verify_moments,
                 Command::scan_family, Command::shift_report})
    if (to_string(c) == s) return c;
  throw ParseError("unknown command '" + std::string(s) + "'");
}

OutputFormat parse_output(std::string_view s) {
  for (auto f : {OutputFormat::text, OutputFormat::json, OutputFormat::csv})
    if (to_string(f) == s) return f;
  throw ParseError("unknown output format '" + std::string(s) + "'");
}

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw ParseError(path + ": unknown field '" + key + "'");
}

Rational rational_field(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  throw ParseError(path + ": expected a rational string \"p/q\"");
}

template <typename T>
T unsigned_field(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ParseError(path + ": expected a non-negative integer");
  return j.get<T>();
}

}  // namespace

FactoredPoly parse_factored(const json& j, const std::string& path) {
  reject_unknown(j, {"lead", "roots"}, path);
  Rational lead = j.contains("lead") ? rational_field(j.at("lead"), path + ".lead") : Rational(1);
  std::vector<Rational> roots;
  if (j.contains("roots")) {
    if (!j.at("roots").is_array()) throw ParseError(path + ".roots: expected an array");
    for (std::size_t i = 0; i < j.at("roots").size(); ++i)
      roots.push_back(rational_field(j.at("roots")[i], path + ".roots[" + std::to_string(i) + "]"));
  }
  try {
    return FactoredPoly(lead, roots);
  } catch (const DomainError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json factored_to_json(const FactoredPoly& f) {
  json roots = json::array();
  for (const auto& r : f.roots()) roots.push_back(jcm::to_string(r));
  return {{"lead", jcm::to_string(f.lead())}, {"roots", roots}};
}

TwoVarPoly parse_polynomial(const json& j, const std::string& path) {
  reject_unknown(j, {"a", "b"}, path);
  if (!j.contains("b") || !j.contains("a")) throw ParseError(path + ": both \"b\" and \"a\" are required");
  return TwoVarPoly(parse_factored(j.at("b"), path + ".b"), parse_factored(j.at("a"), path + ".a"), DegreeRule::any);
}

json polynomial_to_json(const TwoVarPoly& p) { return {{"b", factored_to_json(p.b())}, {"a", factored_to_json(p.a())}}; }

Window parse_window(std::string_view text) {
  auto to_size = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("invalid window '" + std::string(text) + "'");
    return v;
  };
  auto x = text.find_first_of("xX,");
  std::size_t M = to_size(text.substr(0, x));
  std::size_t N = x == std::string_view::npos ? M : to_size(text.substr(x + 1));
  try {
    return Window(M, N);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

JobConfig config_from_json(const json& j) {
  reject_unknown(j,
                 {"command", "polynomial", "window", "tolerances", "output", "seed", "threads", "n", "length", "t_grid",
                  "family", "from", "to", "step", "grid", "out"},
                 "config");
  JobConfig cfg;
  if (!j.contains("command") || !j.at("command").is_string()) throw ParseError("config.command: required string");
  cfg.command = parse_command(j.at("command").get<std::string>());
  if (j.contains("polynomial")) cfg.polynomial = parse_polynomial(j.at("polynomial"));
  if (j.contains("window")) {
    const auto& w = j.at("window");
    if (!w.is_array() || w.size() != 2) throw ParseError("config.window: expected [M, N]");
    try {
      cfg.window = Window(unsigned_field<std::size_t>(w[0], "config.window[0]"),
                          unsigned_field<std::size_t>(w[1], "config.window[1]"));
    } catch (const DomainError& e) {
      throw ParseError(std::string("config.window: ") + e.what());
    }
  }
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    reject_unknown(t, {"tol", "quadrature", "bisect"}, "config.tolerances");
    for (const auto& [key, value] : t.items()) {
      if (!value.is_number() || value.get<double>() <= 0)
        throw ParseError("config.tolerances." + key + ": expected a positive number");
      cfg.tolerances[key] = value.get<double>();
    }
  }
  if (j.contains("output")) cfg.output = parse_output(j.at("output").get<std::string>());
  if (j.contains("seed")) cfg.seed = unsigned_field<std::uint64_t>(j.at("seed"), "config.seed");
  if (j.contains("threads")) cfg.threads = unsigned_field<unsigned>(j.at("threads"), "config.threads");
  if (j.contains("n")) cfg.n = unsigned_field<std::size_t>(j.at("n"), "config.n");
  if (j.contains("length")) cfg.length = unsigned_field<std::size_t>(j.at("length"), "config.length");
  if (j.contains("t_grid")) {
    if (!j.at("t_grid").is_array()) throw ParseError("config.t_grid: expected an array");
    for (const auto& t : j.at("t_grid")) {
      if (!t.is_number()) throw ParseError("config.t_grid: expected numbers");
      cfg.t_grid.push_back(t.get<double>());
    }
  }
  if (j.contains("family")) {
    cfg.family = unsigned_field<int>(j.at("family"), "config.family");
    if (*cfg.family != 1 && *cfg.family != 2) throw ParseError("config.family: must be 1 or 2");
  }
  if (j.contains("from")) cfg.from = rational_field(j.at("from"), "config.from");
  if (j.contains("to")) cfg.to = rational_field(j.at("to"), "config.to");
  if (j.contains("step")) cfg.step = rational_field(j.at("step"), "config.step");
  if (j.contains("grid")) {
    if (!j.at("grid").is_array()) throw ParseError("config.grid: expected an array");
    for (std::size_t i = 0; i < j.at("grid").size(); ++i)
      cfg.grid.push_back(rational_field(j.at("grid")[i], "config.grid[" + std::to_string(i) + "]"));
  }
  if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
  return cfg;
}

json config_to_json(const JobConfig& cfg) {
  json j;
  j["command"] = to_string(cfg.command);
  if (cfg.polynomial) j["polynomial"] = polynomial_to_json(*cfg.polynomial);
  if (cfg.window) j["window"] = {cfg.window->M, cfg.window->N};
  if (!cfg.tolerances.empty()) j["tolerances"] = cfg.tolerances;
  j["output"] = to_string(cfg.output);
  j["seed"] = cfg.seed;
  j["threads"] = cfg.threads;
  if (cfg.n) j["n"] = *cfg.n;
  if (cfg.length) j["length"] = *cfg.length;
  if (!cfg.t_grid.empty()) j["t_grid"] = cfg.t_grid;
  if (cfg.family) j["family"] = *cfg.family;
  if (cfg.from) j["from"] = jcm::to_string(*cfg.from);
  if (cfg.to) j["to"] = jcm::to_string(*cfg.to);
  if (cfg.step) j["step"] = jcm::to_string(*cfg.step);
  if (!cfg.grid.empty()) {
    json g = json::array();
    for (const auto& x : cfg.grid) g.push_back(jcm::to_string(x));
    j["grid"] = g;
  }
  if (cfg.out) j["out"] = *cfg.out;
  return j;
}

JobConfig parse_config_text(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("config syntax error at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
  try {
    return config_from_json(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!piece.empty()) out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  for (const auto& q : parse_rational_list(text)) out.push_back(jcm::to_double(q));
  return out;
}

}  // namespace jcm::cli
