#pragma once

#include <stdexcept>
#include <string>

namespace gcover {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violations: bad arguments, mismatched parents, malformed input.
struct DomainError : Error {
  using Error::Error;
};

// Internal consistency failures.  Thrown when a computation contradicts a
// structural guarantee the construction relies on (e.g. a restricted bracket
// that does not close in the expected basis).  These must abort loudly.
struct ConsistencyError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg), line(line_), col(col_) {}
};

}  // namespace gcover
