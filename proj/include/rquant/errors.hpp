#pragma once

#include <stdexcept>
#include <string>

namespace rquant {

/// Base of every error raised by the library. The CLI maps each subclass to a
/// distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text or file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands live on different spaces or carry different truncation orders.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument failed (e.g. non-unit leading term).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The Lie algebra / cocycle data could not be sliced out of an r-matrix.
class ExtractionError : public Error {
 public:
  using Error::Error;
};

/// A result failed its own post-verification. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rquant
