#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polylie {

/// Base class of every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A symbol tuple violates the consecutive-product condition.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// A symbol that has no meaning, e.g. a weight-one symbol at infinity.
class UndefinedSymbolError : public Error {
 public:
  using Error::Error;
};

/// Generating-series expansion failed (a divided difference did not cancel).
class ExpansionError : public Error {
 public:
  using Error::Error;
};

/// A term could not be classified as regular or inverted.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a pole or a degenerate value.
class SpecializationError : public Error {
 public:
  using Error::Error;
};

/// A sample point is too close to a degenerate locus; callers resample.
class GuardFailure : public Error {
 public:
  using Error::Error;
};

/// A quantity has no supported realization, e.g. a depth-two symbol of
/// weight four.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polylie
