// moment-gibbs: command-line front end for the moment_gibbs library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "commands.hpp"

namespace {

using namespace mgibbs;
using namespace mgibbs::cli;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector-valued Gibbs thermodynamics: partition functions, moment maps, "
               "max-entropy inversion, hulls and tropical limits."};
  app.require_subcommand(1);

  std::string input;
  std::string beta = "";
  std::string mean;
  std::string direction;
  std::string fixed;
  SolveOptions solve;
  SweepRequest sweep;
  CheckRequest check;
  std::int64_t total = 1000;
  std::uint64_t seed = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "State set JSON file, or - for stdin")->required();
  };

  auto* forward = app.add_subcommand("forward", "Gibbs summary at beta");
  add_input(forward);
  forward->add_option("--beta", beta, "Comma-separated beta")->required();

  auto* invert = app.add_subcommand("invert", "Solve <E>(beta) = mean for beta");
  add_input(invert);
  invert->add_option("--mean", mean, "Comma-separated target mean energy")->required();
  invert->add_option("--tol", solve.grad_tol, "Scaled gradient tolerance");
  invert->add_option("--max-iter", solve.max_iter, "Newton iteration cap");

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of <E>, S, log Z along one beta axis");
  add_input(sweep_cmd);
  sweep_cmd->add_option("--axis", sweep.axis, "Swept beta component")->required();
  sweep_cmd->add_option("--from", sweep.from, "First grid value")->required();
  sweep_cmd->add_option("--to", sweep.to, "Last grid value")->required();
  sweep_cmd->add_option("--steps", sweep.steps, "Number of grid points")->required();
  sweep_cmd->add_option("--fixed", fixed, "Other beta components (comma-separated)");

  auto* hull = app.add_subcommand("hull", "Vertices and facets of the convex hull");
  add_input(hull);

  auto* limit = app.add_subcommand("limit", "Tropical limit along a direction");
  add_input(limit);
  limit->add_option("--direction", direction, "Comma-separated direction")->required();

  auto* micro = app.add_subcommand("microstates", "Sample occupation counts from the Gibbs law");
  add_input(micro);
  micro->add_option("--total", total, "Number of particles");
  micro->add_option("--seed", seed, "SplitMix64 seed");
  micro->add_option("--beta", beta, "Comma-separated beta (default 0)");

  auto* toric = app.add_subcommand("toric", "Positive toric point and its moment image");
  add_input(toric);
  toric->add_option("--beta", beta, "Comma-separated beta")->required();

  auto* check_cmd = app.add_subcommand("check", "Legendre-identity and round-trip residual suite");
  add_input(check_cmd);
  check_cmd->add_option("--points", check.points, "Number of grid points");
  check_cmd->add_option("--radius", check.radius, "Bound on the beta grid norm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }

  const CommandResult result = guarded([&]() -> CommandResult {
    const StateSet states = parse_state_set(read_input(input));
    auto beta_or_zero = [&] {
      return beta.empty() ? std::vector<double>(static_cast<std::size_t>(states.dim()), 0.0)
                          : parse_list(beta);
    };
    if (*forward) return cmd_forward(states, parse_list(beta));
    if (*invert) return cmd_invert(states, parse_list(mean), solve);
    if (*sweep_cmd) {
      if (!fixed.empty()) sweep.fixed = parse_list(fixed);
      return cmd_sweep(states, sweep);
    }
    if (*hull) return cmd_hull(states);
    if (*limit) return cmd_limit(states, parse_list(direction));
    if (*micro) return cmd_microstates(states, beta_or_zero(), total, seed);
    if (*toric) return cmd_toric(states, parse_list(beta));
    return cmd_check(states, check);
  });

  std::cout << result.payload;
  for (const std::string& line : result.diagnostics) std::cerr << "moment-gibbs: " << line << "\n";
  return result.exit_code;
}
