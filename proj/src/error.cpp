#include "wenger/bigint.hpp"
#include "wenger/error.hpp"

namespace wenger {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::non_prime: return "NonPrime";
    case ErrorCode::reducible_modulus: return "ReducibleModulus";
    case ErrorCode::degree_mismatch: return "DegreeMismatch";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::field_mismatch: return "FieldMismatch";
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::invalid_rank: return "InvalidRank";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::theta_not_injective: return "ThetaNotInjective";
    case ErrorCode::unsupported_regime: return "UnsupportedRegime";
    case ErrorCode::unsupported_family: return "UnsupportedFamily";
    case ErrorCode::solve_failed: return "SolveFailed";
    case ErrorCode::no_six_cycle: return "NoSixCycle";
    case ErrorCode::same_point: return "SamePoint";
    case ErrorCode::acyclic: return "Acyclic";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::io_error: return "IoError";
  }
  return "Unknown";
}

BigInt parse_decimal(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw Error(ErrorCode::parse_error, "empty integer");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw Error(ErrorCode::parse_error, "not a decimal integer: " + s);
  }
  BigInt v(s.substr(start));
  return s[0] == '-' ? BigInt(-v) : v;
}

}  // namespace wenger
