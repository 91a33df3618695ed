#pragma once

#include <stdexcept>
#include <string>

namespace cck {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, or 0 when the input has no
/// line structure (e.g. a polynomial string).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A structural invariant does not hold: bad triangulation, rank mismatch,
/// non-exact division, failed homogeneity check.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments of an operation is violated
/// (index out of range, boundary arc passed where an arc is needed, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace cck
