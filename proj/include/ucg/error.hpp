#pragma once

#include <stdexcept>
#include <string>

namespace ucg {

/// Broad category of a failure; the CLI maps these onto exit codes.
enum class ErrorKind {
  InvalidInput,        // malformed arguments or objects violating their invariants
  Precondition,        // a mathematical precondition of the operation is not met
  Unsupported,         // the field or dimension is outside what the operation handles
  Internal,            // a guaranteed-to-exist object was not found
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Internal: return "internal error";
  }
  return "error";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace ucg
