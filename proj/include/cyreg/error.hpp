#pragma once

#include <stdexcept>
#include <string>

namespace cyreg {

enum class ErrorCode {
  invalid_argument,
  parse,
  dimension_mismatch,
  io,
  validation,
};

// Base exception for all library failures. The code is what the C API
// reports back across the ABI boundary.
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

}  // namespace cyreg
