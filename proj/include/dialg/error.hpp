#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dialg {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad field specification (non-prime p) or a coefficient outside the field.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Operands over different fields or of incompatible dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold on its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The operation is not decidable in this setting (e.g. exhaustive search over Q).
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed the configured candidate budget.
class SearchBoundExceeded : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

/// A consistency check inside an algorithm failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dialg
