#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace necklace {

struct RunConfig {
  std::string command;
  std::string c = "1/2";
  std::optional<std::string> c_prime;
  long mode = 0;
  int modes = 3;
  int degree = 6;
  std::string chart = "xy";
  std::string structure = "pi_c";
  int quad_points = 4096;
  std::uint64_t seed = 42;
  std::string format = "json";
  std::optional<std::string> out;
};

struct Claim {
  std::string id;
  std::string statement;
  std::string status;  // PASS, FAIL, SKIPPED
  std::string detail;
};

/// Runs the full reproduction pipeline; exit code 0 iff no claim failed.
int cmd_verify_paper(const RunConfig& config, nlohmann::json& report);

/// Runs one module operation and fills `report`; returns the exit code.
int cmd_dispatch(const RunConfig& config, nlohmann::json& report);

/// Parses argv, runs the command and writes the report to `out` (or the --out
/// file). Exit codes: 0 success, 1 claim or computation failure, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Indented plain-text rendering of a report.
std::string render_text(const nlohmann::json& report);

}  // namespace necklace
