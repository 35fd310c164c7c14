#pragma once

#include "conevol/functionals.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace conevol::cli {

enum class Format { Table, Records, Csv };

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kComputation = 3 };

struct CommandPlan {
  std::string subcommand;
  std::optional<std::string> shape;
  std::optional<std::string> input;
  std::optional<std::string> output;
  std::vector<std::string> weights;
  std::vector<double> p_values;
  std::string checks = "all";
  Format format = Format::Table;
  AngleConvention convention = AngleConvention::Exterior;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;  ///< Monte Carlo mean width; 0 disables it
  int k = 0;
  std::string objective = "volume";
  int restarts = 20;
  int max_iterations = 2000;
  /// Set when --help was requested; execute() prints it and exits 0.
  std::optional<std::string> help;
};

/// Throws Error(UsageError) for unknown flags, conflicting or missing sources
/// and malformed values.
CommandPlan parse(std::span<const std::string> args);

/// Runs a validated plan. Returns the process exit code: 0 success,
/// 1 inequality violation (verify), 2 usage, 3 computation error.
int execute(const CommandPlan& plan, std::ostream& out, std::ostream& err);

/// parse + execute with errors mapped to exit codes.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace conevol::cli
