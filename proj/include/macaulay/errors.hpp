#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace macaulay {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is the 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), message_(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// A precondition of a library operation does not hold for its input.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Leading forms of a presentation are linearly dependent; `relation()` holds
/// coefficients c_r, one per generator, with sum c_r * G_r[d_r] = 0.
class DependentLeadingForms : public InvalidArgument {
 public:
  DependentLeadingForms(const std::string& what, std::vector<mpq_class> relation)
      : InvalidArgument(what), relation_(std::move(relation)) {}
  const std::vector<mpq_class>& relation() const noexcept { return relation_; }

 private:
  std::vector<mpq_class> relation_;
};

class SocleDegreeTooLarge : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Raised when an internal cross-check fails. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace macaulay
