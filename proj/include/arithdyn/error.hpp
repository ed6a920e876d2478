#pragma once

#include <stdexcept>
#include <string>

namespace arithdyn {

enum class ErrorKind {
  Structural,   // mismatched variable lists, arity, malformed values
  Parse,        // text input could not be parsed (message carries line/column)
  Parameter,    // invalid user-supplied parameter
  Resource,     // a configured cap was exceeded
  Unsupported,  // requested operation is out of range for this build
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace arithdyn
