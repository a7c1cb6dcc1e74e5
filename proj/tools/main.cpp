#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_solver_flags(CLI::App* cmd, miep::SolveConfig& cfg) {
  cmd->add_option("--starts", cfg.starts, "Number of Newton starts (0 = 64 * n!)");
  cmd->add_option("--seed", cfg.seed, "Random seed");
  cmd->add_option("--tol", cfg.residual_tol, "Absolute residual tolerance");
  cmd->add_option("--max-iters", cfg.max_iters, "Newton iteration budget per start");
  cmd->add_option("--dedup-tol", cfg.dedup_tol, "Relative distance for merging solutions");
  cmd->add_option("--threads", cfg.threads, "Worker threads for multi-start")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicative inverse eigenvalue problem toolkit"};
  app.require_subcommand(1);

  std::string matrix;
  std::string family;
  std::string target;
  std::optional<std::string> opt_matrix;
  std::optional<int> order;
  std::uint64_t seed = 0;
  miep::SolveConfig cfg;

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a matrix");
  charpoly->add_option("matrix", matrix, "Matrix JSON file")->required();

  auto* check = app.add_subcommand("check", "Decide generic solvability for a family");
  check->add_option("--family", family, "Family JSON file")->required();
  check->add_option("--matrix", opt_matrix, "Fixed matrix M (optional)");
  check->add_option("--seed", seed, "Random seed");

  auto* solve = app.add_subcommand("solve", "Find family members Z with charpoly(MZ) = p");
  solve->add_option("--family", family, "Family JSON file")->required();
  solve->add_option("--matrix", matrix, "Matrix JSON file")->required();
  solve->add_option("--target", target, "Poly JSON file")->required();
  add_solver_flags(solve, cfg);

  auto* count = app.add_subcommand("count", "Count diagonal solutions and compare with n!");
  count->add_option("--matrix", matrix, "Matrix JSON file")->required();
  count->add_option("--target", target, "Poly JSON file")->required();
  count->add_option("--n", order, "Expected matrix order");
  add_solver_flags(count, cfg);

  auto* nondegen = app.add_subcommand("nondegen", "Check all principal minors of M");
  nondegen->add_option("--matrix", matrix, "Matrix JSON file")->required();

  auto* witness = app.add_subcommand("witness", "Construct a matrix M certifying solvability");
  witness->add_option("--family", family, "Family JSON file")->required();
  witness->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : miep::cli::exit_code(miep::cli::Status::invalid_input);
  }

  using namespace miep::cli;
  CommandResult result;
  if (*charpoly) {
    result = cmd_charpoly(matrix);
  } else if (*check) {
    result = cmd_check(family, opt_matrix, seed);
  } else if (*solve) {
    result = cmd_solve(family, matrix, target, cfg);
  } else if (*count) {
    result = cmd_count(matrix, target, order, cfg);
  } else if (*nondegen) {
    result = cmd_nondegen(matrix);
  } else {
    result = cmd_witness(family, seed);
  }

  std::cout << result.payload.dump(2) << '\n';
  std::cerr << "status: " << to_string(result.status) << ", " << result.timing_ms << " ms\n";
  return exit_code(result.status);
}
