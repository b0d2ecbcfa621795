#pragma once

#include <stdexcept>
#include <string>

namespace terracini {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Zero denominators, non-invertible elements, division by zero.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Mixed fields, mismatched rings or layouts.
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition of an operation does not hold
// (inadmissible r, singular point, repeated point, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SingularPointError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Malformed text input or unreadable files.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace terracini
