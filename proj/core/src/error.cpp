#include "miep/error.hpp"

namespace miep {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid-input";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::singular_matrix: return "singular-matrix";
    case ErrorCode::dependent_basis: return "dependent-basis";
    case ErrorCode::not_found: return "not-found";
    case ErrorCode::trace_condition_violated: return "trace-condition-violated";
    case ErrorCode::search_exhausted: return "search-exhausted";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::too_large: return "too-large";
  }
  return "unknown";
}

}  // namespace miep
