#pragma once

#include <stdexcept>
#include <string>

namespace hodgekit {

/// Failure categories shared by the C++ core and the C API.
enum class ErrorCode {
  InvalidArgument,
  Parse,
  NotSmooth,
  SizeBudget,
  ParameterTooLarge,
  DegreeMismatch,
  ModulusMismatch,
  NotContained,
  Sampling,
  UndefinedLevel,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace hodgekit
