#pragma once

#include <stdexcept>
#include <string>

namespace hreg {

enum class ErrorCode {
  MalformedHeader,
  MalformedEdge,
  NonUniformEdge,
  DuplicateVertexInEdge,
  DuplicateEdge,
  LinearityViolation,
  VertexOutOfRange,
  WrongUniformity,
  NotTripartite,
  IndexOutOfRange,
  UnsupportedOrder,
  InfeasibleParameters,
  InsufficientDensity,
  RetryLimitExceeded,
  CapExceeded,
  LinkNotTwoRegular,
  NotASurface,
  ProjectionInvalid,
  MalformedCertificate,
};

const char* error_code_name(ErrorCode c);

// Input/contract violations. Search misses are reported through result
// structs, not exceptions.
class InputError : public std::runtime_error {
public:
  InputError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw InputError(code, what);
}

}  // namespace hreg
