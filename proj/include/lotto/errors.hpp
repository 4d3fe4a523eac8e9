#pragma once

#include <stdexcept>
#include <string>

namespace lotto {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A fixed-width count would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed design text. `line()` is 1-based, 0 when not line-specific.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A block or design violates its structural invariants.
class InvalidDesign : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search would visit more candidates than allowed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace lotto
