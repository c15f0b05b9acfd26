#pragma once
#include <stdexcept>
#include <string>

namespace lamina {

enum class ErrorKind {
  Validation,   // malformed or non-canonical input
  Domain,       // input outside the operation's domain (wrong surface, etc.)
  Budget,       // search budget exhausted before certification
  Io,           // file / serialization problems
  Numeric,      // non-convergence or out-of-range numerics
  Usage,        // bad arguments at the API/CLI boundary
  Internal,     // invariant violation; indicates a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

inline void require(bool cond, ErrorKind k, const std::string& msg) {
  if (!cond) fail(k, msg);
}

} // namespace lamina
