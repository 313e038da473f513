// Licensed under the Apache License 2.0 (see LICENSE file).
#pragma once

#include <stdexcept>
#include <string>

namespace hessq {

// Numeric values are shared with the C API status codes.
enum class ErrorCode : int {
  InvalidArgument = 1,
  NonSquare = 2,
  UnmappedVariable = 3,
  UngradedVariable = 4,
  NotNondecreasing = 5,
  BelowDiagonal = 6,
  SizeMismatch = 7,
  IndexOutOfRange = 8,
  UnsupportedFlavor = 9,
  DegreeBoundExceeded = 10,
  ResourceLimit = 11,
  SamplerStuck = 12,
  UnknownCheck = 13,
  InvalidParams = 14,
  NotHomogeneous = 15,
  Internal = 99,
};

const char* error_code_name(ErrorCode code);

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

}  // namespace hessq
