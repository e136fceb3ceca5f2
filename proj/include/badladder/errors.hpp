#pragma once

#include <stdexcept>
#include <string>

namespace badladder {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: presentation text, CLI values, out-of-range coordinates.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A query was made whose precondition does not hold (e.g. an uncertified
/// distance was needed, or a source is not a ladder vertex).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (vertex count, pair count) was exceeded.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// The embedded ladder does not have the expected labeled structure.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A mathematical assertion failed, e.g. two target margins produced
/// different bundles.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace badladder
