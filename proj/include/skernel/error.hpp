#pragma once

#include <stdexcept>
#include <string>

namespace skernel {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the accepted range of an operation (bad face index, bad horn).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An input object violates a documented precondition (unpointed where pointed is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A degree lies outside the range in which a truncated object is trustworthy.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Shapes or identities of an object do not fit together (d∘d ≠ 0, simplicial identity fails, ...).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A serialized document could not be read.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace skernel
