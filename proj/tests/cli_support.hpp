// Runs the moment-gibbs binary for the CLI test and the acceptance suite.
#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgibbs::testing {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

inline std::string data_file(const std::string& name) { return std::string(MG_DATA_DIR) + "/" + name; }

/// Runs `moment-gibbs <args>`; stderr is discarded unless merge_stderr is set.
/// A non-empty stdin_text (no single quotes) is piped to the process.
inline CliRun run_cli(const std::string& args, bool merge_stderr = false,
                      const std::string& stdin_text = "") {
  const std::string feed = stdin_text.empty() ? "" : "printf '%s' '" + stdin_text + "' | ";
  const std::string command = feed + "\"" + MG_CLI_PATH + "\" " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  CliRun run;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) run.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

struct Invocation {
  std::string args;
  int expected_exit;
};

/// The documented example invocations and failure inputs.
inline std::vector<Invocation> documented_invocations() {
  const std::string two = data_file("two_state.json");
  const std::string square = data_file("square.json");
  return {
      {"forward " + two + " --beta 0", 0},
      {"forward " + two + " --beta 1.0986123", 0},
      {"forward " + two + " --beta 0,0", 2},
      {"invert " + two + " --mean 0.25", 0},
      {"invert " + two + " --mean 0.5", 0},
      {"invert " + two + " --mean 1.5", 3},
      {"invert " + two + " --mean 1", 3},
      {"invert " + two + " --mean 0.25 --max-iter 1", 4},
      {"sweep " + two + " --axis 0 --from -5 --to 5 --steps 11", 0},
      {"sweep " + two + " --axis 0 --from -5 --to 5 --steps 1", 2},
      {"sweep " + square + " --axis 0 --from -3 --to 3 --steps 7 --fixed 0", 0},
      {"hull " + square, 0},
      {"hull " + data_file("cube.json"), 0},
      {"limit " + two + " --direction 1", 0},
      {"limit " + square + " --direction 1,0", 0},
      {"microstates " + two + " --total 1000 --seed 7", 0},
      {"microstates " + data_file("three_level.json") + " --total 100000 --seed 1 --beta 0.5", 0},
      {"toric " + square + " --beta 0.5,0.5", 0},
      {"check " + two, 0},
      {"check " + data_file("four_level.json"), 0},
      {"forward " + data_file("missing.json") + " --beta 0", 2},
      {"forward " + two, 2},
  };
}

}  // namespace mgibbs::testing
