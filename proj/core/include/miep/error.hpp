#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace miep {

enum class ErrorCode {
  invalid_input,
  dimension_mismatch,
  singular_matrix,
  dependent_basis,
  not_found,
  trace_condition_violated,
  search_exhausted,
  degenerate,
  too_large,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto a status without parsing
/// the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace miep
