#pragma once

#include <stdexcept>

namespace qapblock {

/// Input violates a documented precondition (dimension mismatch, malformed value, bad range).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix or pattern is outside the class an operation requires.
class ClassificationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive search was refused because the instance exceeds its cap.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace qapblock
