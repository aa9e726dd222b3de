#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json_writer.hpp"
#include "moment_gibbs/moment_solver.hpp"
#include "moment_gibbs/state_space.hpp"

namespace mgibbs::cli {

inline constexpr const char* kSchema = "moment-gibbs/v1";

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kInfeasible = 3,
  kNoConvergence = 4,
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string payload;
  std::vector<std::string> diagnostics;
};

/// Parses `{"dim": n, "points": [[...], ...], "labels": [...]}`; unknown keys
/// are rejected. Throws mgibbs::Error(MalformedInput) on schema violations.
StateSet parse_state_set(const std::string& text);

/// "0.5,-1,2" -> {0.5, -1, 2}. Throws mgibbs::Error(MalformedInput).
std::vector<double> parse_list(const std::string& text);

struct SweepRequest {
  int axis = 0;
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
  std::vector<double> fixed;  ///< the other components, or a full beta
};

struct CheckRequest {
  int points = 100;
  double radius = 10.0;
  double legendre_tolerance = 1e-10;
  double roundtrip_tolerance = 1e-8;
};

CommandResult cmd_forward(const StateSet& states, const std::vector<double>& beta);
CommandResult cmd_invert(const StateSet& states, const std::vector<double>& mean,
                         const SolveOptions& opts);
CommandResult cmd_sweep(const StateSet& states, const SweepRequest& request);
CommandResult cmd_hull(const StateSet& states);
CommandResult cmd_limit(const StateSet& states, const std::vector<double>& direction);
CommandResult cmd_microstates(const StateSet& states, const std::vector<double>& beta,
                              std::int64_t total, std::uint64_t seed);
CommandResult cmd_toric(const StateSet& states, const std::vector<double>& beta);
CommandResult cmd_check(const StateSet& states, const CheckRequest& request);

/// Runs `body`, converting library exceptions into an error payload with the
/// matching exit code.
template <typename Body>
CommandResult guarded(Body&& body);

CommandResult error_result(const std::exception& error);

template <typename Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const std::exception& error) {
    return error_result(error);
  }
}

}  // namespace mgibbs::cli
