#pragma once

#include <stdexcept>
#include <string>

namespace gradr {

/// Base class of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive operation refused because the ring exceeds the element cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Presentation fails one or more ring axioms (see ValidationReport).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class NotGraded : public Error {
 public:
  using Error::Error;
};

class NotProper : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different rings (or different polynomial gradings).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same mathematical quantity disagree.
/// This always indicates a bug and must never be swallowed.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

/// Polynomial long division needs a unit leading coefficient.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed ring file, ideal literal or polynomial literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gradr
