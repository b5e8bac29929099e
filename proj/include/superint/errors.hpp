#ifndef SUPERINT_ERRORS_HPP
#define SUPERINT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superint {

/// Raised for malformed expression text; carries the 0-based offset of the
/// offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a numeric or exact evaluation leaves the real domain
/// (fractional power of a non-positive x, negative power of zero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by algebraic operations whose operands fall outside the supported
/// ring (division by a non-monomial, negative powers of alpha or hbar, ...).
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace superint

#endif  // SUPERINT_ERRORS_HPP
