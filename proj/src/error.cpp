#include "reservekit/error.hpp"

namespace reservekit {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_dimension: return "invalid dimension";
    case ErrorCode::insufficient_candidates: return "insufficient candidates";
    case ErrorCode::degenerate_intensity: return "degenerate intensity";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::index_out_of_range: return "index out of range";
    case ErrorCode::wrong_solver: return "wrong solver";
    case ErrorCode::non_integer_cost: return "non-integer cost";
    case ErrorCode::too_many_parcels: return "too many parcels";
    case ErrorCode::length_mismatch: return "length mismatch";
    case ErrorCode::no_interior_rows: return "no interior rows";
    case ErrorCode::layout_unsupported: return "layout unsupported";
    case ErrorCode::parse_error: return "parse error";
    case ErrorCode::io_error: return "io error";
  }
  return "unknown";
}

}  // namespace reservekit
