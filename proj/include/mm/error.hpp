#pragma once

#include <stdexcept>
#include <string>

namespace mm {

enum class ErrorKind {
  Parse,        // malformed input document
  Validation,   // well-formed document violating a model invariant
  Unsupported,  // operation called outside its capacity regime
  TooLarge,     // enumeration / search-space guard tripped
  Infeasible,   // no solution exists under the given constraints
  Contract,     // caller violated a precondition
  Internal,     // a self-check failed; always a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace mm
