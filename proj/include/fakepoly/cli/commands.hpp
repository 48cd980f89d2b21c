#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fakepoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInconclusive = 3;

struct CommandResult {
  nlohmann::json report;  // null when only help text was produced
  int exit_code = kExitOk;
  std::string text;       // help / table output for humans
  bool table = false;     // --format table was requested
};

/// Runs one invocation; `args` excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

/// Splits one scenario line into arguments (double/single quotes, backslash
/// escapes). A leading "fakepoly" token is dropped.
std::vector<std::string> tokenize_invocation(std::string_view line);

/// Executes a scenario: one invocation per line, '#' starts a comment.
/// Reports are collected into a JSON array; the exit code is the largest
/// exit code of any invocation.
CommandResult run_scenario(std::string_view text);

/// Human-oriented rendering of a report (no stability guarantee).
std::string render_table(const nlohmann::json& report);

}  // namespace fakepoly::cli
