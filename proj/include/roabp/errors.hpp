#ifndef ROABP_ERRORS_HPP
#define ROABP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace roabp {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing values from different coefficient fields, or mismatched arities.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A requested root of unity does not exist in the field.
class NoRootError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (polynomials, field specs, orders, graphs).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operation precondition violated (zero polynomial, bad degree, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input claimed symmetric is not.
class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (exhaustive orders, matrix nonzeros) was exceeded.
class CapError : public Error {
 public:
  using Error::Error;
};

}  // namespace roabp

#endif  // ROABP_ERRORS_HPP
