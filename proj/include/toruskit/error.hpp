#pragma once

#include <stdexcept>
#include <string>

namespace toruskit {

// Domain error with a stable machine-readable code (surfaced by the CLI as
// {"error":{"code":...,"message":...}}).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

namespace errc {
inline constexpr const char* non_square = "NON_SQUARE";
inline constexpr const char* dimension_mismatch = "DIMENSION_MISMATCH";
inline constexpr const char* dependent_columns = "DEPENDENT_COLUMNS";
inline constexpr const char* degree_bound = "DEGREE_BOUND_EXCEEDED";
inline constexpr const char* not_expanding = "NOT_EXPANDING";
inline constexpr const char* not_connected = "NOT_CONNECTED";
inline constexpr const char* budget_exceeded = "BUDGET_EXCEEDED";
inline constexpr const char* precision_exhausted = "PRECISION_EXHAUSTED";
inline constexpr const char* rank_deficient = "RANK_DEFICIENT";
inline constexpr const char* overflow_guard = "OVERFLOW_GUARD";
inline constexpr const char* precondition = "PRECONDITION_VIOLATED";
inline constexpr const char* parse = "PARSE_ERROR";
}  // namespace errc

}  // namespace toruskit
