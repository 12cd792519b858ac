#pragma once

#include <stdexcept>
#include <string>

namespace homdom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (negative radicand, zero scale, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Polynomials or maps living in incompatible variable spaces.
class SpaceError : public Error {
 public:
  using Error::Error;
};

/// Group parameters violating their defining constraint.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// Composition of group elements whose parameters could not be recovered.
class ClosureViolation : public Error {
 public:
  using Error::Error;
};

/// Levi form requested at a point where the gradient vanishes.
class NotAHypersurfacePoint : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial/map literal or configuration text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace homdom
