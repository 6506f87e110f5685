#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logtorsor {

enum class ErrorCode {
  CapExceeded,
  NotStabilized,
  DisconnectedGraph,
  InvalidGraph,
  InvalidFiber,
  DegreeNotZero,
  SyntaxError,
  UnknownVariable,
  PointNotOnFiber,
  CenterNotOnFiber,
  NotHypersurface,
  NotTriangular,
  UnknownExample,
  InvalidInput,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Resource limits (enumeration caps, stabilization windows) as opposed to
/// malformed input.
constexpr bool is_limit_error(ErrorCode code) noexcept {
  return code == ErrorCode::CapExceeded || code == ErrorCode::NotStabilized;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace logtorsor
