#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <miep/io.hpp>
#include <miep/solver.hpp>

namespace miep::cli {

enum class Status { ok, no_solution, degenerate, invalid_input, inconclusive };

std::string_view to_string(Status s) noexcept;

/// Process exit code for each status: 0, 2, 3, 4, 5.
int exit_code(Status s) noexcept;

struct CommandResult {
  Status status = Status::ok;
  io::json payload;
  double timing_ms = 0.0;
};

/// Arguments naming a JSON document accept either a file path or the JSON
/// text itself (anything starting with '{').
io::json load_document(const std::string& arg);

CommandResult cmd_charpoly(const std::string& matrix);
CommandResult cmd_check(const std::string& family, const std::optional<std::string>& matrix,
                        std::uint64_t seed);
CommandResult cmd_solve(const std::string& family, const std::string& matrix,
                        const std::string& target, const SolveConfig& cfg);
CommandResult cmd_count(const std::string& matrix, const std::string& target,
                        std::optional<int> n, const SolveConfig& cfg);
CommandResult cmd_nondegen(const std::string& matrix);
CommandResult cmd_witness(const std::string& family, std::uint64_t seed);

}  // namespace miep::cli
