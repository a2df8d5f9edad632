#pragma once

#include <stdexcept>
#include <string>

namespace qdouble {

enum class ErrorCode {
  invalid_argument = 1,
  parse_error,
  division_by_zero,
  not_invertible,
  budget_exceeded,
  io_error,
  internal,
};

/// Exception type used throughout the core. The C API maps `code()` onto its
/// integer status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace qdouble
