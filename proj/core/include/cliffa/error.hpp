#pragma once

#include <stdexcept>
#include <string>

namespace cliffa {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built under different algebra dimensions were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

// An argument violates an operation's precondition (wrong grade, bad
// dimension, malformed index, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Evaluation at a singular point of a kernel or weight.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

// A Moebius transformation was evaluated at (or within 1e-8 of) a pole.
class PoleError : public SingularPoint {
 public:
  using SingularPoint::SingularPoint;
};

// Text or JSON input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An exact linear solve for kernel constants had no solution. This signals
// an internal inconsistency, not a user error.
class UnsolvableAnsatz : public Error {
 public:
  using Error::Error;
};

}  // namespace cliffa
