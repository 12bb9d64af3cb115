#pragma once

#include <stdexcept>
#include <string>

namespace detlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (field spec, polynomial, point, matrix file).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos = std::string::npos)
      : Error(pos == std::string::npos ? what : what + " at position " + std::to_string(pos)),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// A documented precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A proven bound or invariant failed; this indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace detlab
