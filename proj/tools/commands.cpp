#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <miep/assignment.hpp>
#include <miep/error.hpp>
#include <miep/solvability.hpp>

namespace miep::cli {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::ok: return "ok";
    case Status::no_solution: return "no-solution";
    case Status::degenerate: return "degenerate";
    case Status::invalid_input: return "invalid-input";
    case Status::inconclusive: return "inconclusive";
  }
  return "unknown";
}

int exit_code(Status s) noexcept {
  switch (s) {
    case Status::ok: return 0;
    case Status::no_solution: return 2;
    case Status::degenerate: return 3;
    case Status::invalid_input: return 4;
    case Status::inconclusive: return 5;
  }
  return 4;
}

io::json load_document(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return io::parse(arg);
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::invalid_input, "cannot open \"" + arg + "\"");
  std::ostringstream text;
  text << in.rdbuf();
  return io::parse(text.str());
}

namespace {

Status status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::degenerate: return Status::degenerate;
    case ErrorCode::trace_condition_violated: return Status::no_solution;
    case ErrorCode::search_exhausted:
    case ErrorCode::not_found: return Status::inconclusive;
    default: return Status::invalid_input;
  }
}

/// Runs `body`, folding library errors into the result and timing the call.
template <class Body>
CommandResult run(Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    result = body();
  } catch (const Error& e) {
    result.status = status_for(e.code());
    result.payload = {{"error", std::string(miep::to_string(e.code()))}, {"message", e.what()}};
  } catch (const io::json::exception& e) {
    result.status = Status::invalid_input;
    result.payload = {{"error", "invalid-input"}, {"message", e.what()}};
  }
  result.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace

CommandResult cmd_charpoly(const std::string& matrix) {
  return run([&] {
    const Matrix m = io::matrix_from_json(load_document(matrix));
    return CommandResult{Status::ok, io::poly_to_json(charpoly(m))};
  });
}

CommandResult cmd_check(const std::string& family, const std::optional<std::string>& matrix,
                        std::uint64_t seed) {
  return run([&] {
    const AffineFamily f = io::family_from_json(load_document(family));
    std::optional<Matrix> m;
    if (matrix) m = io::matrix_from_json(load_document(*matrix));
    const SolvabilityReport report = check_generic_solvability(f, m, seed);
    const Status status = report.verdict == Verdict::certified_solvable     ? Status::ok
                          : report.verdict == Verdict::certified_unsolvable ? Status::no_solution
                                                                            : Status::inconclusive;
    return CommandResult{status, io::report_to_json(report)};
  });
}

CommandResult cmd_solve(const std::string& family, const std::string& matrix,
                        const std::string& target, const SolveConfig& cfg) {
  return run([&] {
    const AssignmentContext ctx(io::matrix_from_json(load_document(matrix)),
                                io::family_from_json(load_document(family)));
    const MonicPoly p = io::poly_from_json(load_document(target));
    const SolutionSet set = solve(ctx, p, cfg);
    return CommandResult{set.distinct_count > 0 ? Status::ok : Status::no_solution,
                         io::solution_set_to_json(set, cfg)};
  });
}

CommandResult cmd_count(const std::string& matrix, const std::string& target,
                        std::optional<int> n, const SolveConfig& cfg) {
  return run([&] {
    const Matrix m = io::matrix_from_json(load_document(matrix));
    if (n && *n != m.rows()) {
      throw Error(ErrorCode::invalid_input, "--n does not match the matrix order");
    }
    const MonicPoly p = io::poly_from_json(load_document(target));
    const CountResult result = count_solutions_diagonal(m, p, cfg);
    return CommandResult{result.match ? Status::ok : Status::inconclusive,
                         io::count_to_json(result, cfg)};
  });
}

CommandResult cmd_nondegen(const std::string& matrix) {
  return run([&] {
    const NondegeneracyReport report = diag_nondegenerate(io::matrix_from_json(load_document(matrix)));
    return CommandResult{report.nondegenerate ? Status::ok : Status::degenerate,
                         io::nondegeneracy_to_json(report)};
  });
}

CommandResult cmd_witness(const std::string& family, std::uint64_t seed) {
  return run([&] {
    const Witness w = construct_witness_M(io::family_from_json(load_document(family)), seed);
    return CommandResult{Status::ok, io::witness_to_json(w)};
  });
}

}  // namespace miep::cli
