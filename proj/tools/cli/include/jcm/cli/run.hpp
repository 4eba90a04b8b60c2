#pragma once

#include <filesystem>
#include <iosfwd>

#include "jcm/cli/config.hpp"

namespace jcm::cli {

/// Process exit codes.
inline constexpr int exit_ok = 0;         ///< all checks passed, no violation found
inline constexpr int exit_error = 1;      ///< usage, parse or accuracy error
inline constexpr int exit_violation = 2;  ///< a violation certificate was produced

/// Executes one job. The report goes to `out` unless cfg.out names a file.
/// Errors are reported on `err` and mapped to exit_error.
int run(const JobConfig& cfg, std::ostream& out, std::ostream& err);

/// Writes one JSON file per reproduced claim plus summary.json into outdir.
/// Returns exit_ok when every claim holds; otherwise names the failing claims
/// on `log` and returns exit_error.
int reproduce_claims(const std::filesystem::path& outdir, std::uint64_t seed, std::ostream& log);

}  // namespace jcm::cli
