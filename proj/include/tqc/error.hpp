#pragma once

#include <stdexcept>
#include <string>

namespace tqc {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operator index, dimension or argument outside its valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A computation needs simplices above the truncation window of its input.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition (quasi-category, Kan, connectivity...) failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input data violates a structural invariant (simplicial identities,
/// composition laws, order axioms).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A JSON document does not match the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace tqc
