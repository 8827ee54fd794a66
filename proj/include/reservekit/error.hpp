#pragma once

#include <stdexcept>
#include <string>

namespace reservekit {

enum class ErrorCode {
  invalid_dimension,
  insufficient_candidates,
  degenerate_intensity,
  invalid_argument,
  index_out_of_range,
  wrong_solver,
  non_integer_cost,
  too_many_parcels,
  length_mismatch,
  no_interior_rows,
  layout_unsupported,
  parse_error,
  io_error,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace reservekit
