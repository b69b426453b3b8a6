#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wenger {

enum class ErrorCode {
  non_prime,
  reducible_modulus,
  degree_mismatch,
  division_by_zero,
  field_mismatch,
  invalid_argument,
  invalid_rank,
  out_of_range,
  budget_exceeded,
  theta_not_injective,
  unsupported_regime,
  unsupported_family,
  solve_failed,
  no_six_cycle,
  same_point,
  acyclic,
  parse_error,
  io_error,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures surface as this exception; `code()` identifies the
/// contract that was violated so callers (the CLI in particular) can map it
/// to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wenger
