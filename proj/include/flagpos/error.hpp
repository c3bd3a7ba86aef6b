#pragma once

#include <stdexcept>
#include <string>

namespace flagpos {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  DivisionByZero = 3,
  Dimension = 4,
  Domain = 5,
  CapExceeded = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace flagpos
