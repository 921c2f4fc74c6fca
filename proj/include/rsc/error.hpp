#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised for S_6, where Aut(S_n) = Inn(S_n) fails and the counting
/// formula no longer classifies isomorphism classes.
class UnsupportedGroupError : public DomainError {
public:
  explicit UnsupportedGroupError(std::size_t n);
  std::size_t n() const noexcept { return n_; }

private:
  std::size_t n_;
};

/// Malformed textual input. `position()` is a 0-based offset into the text.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

private:
  std::size_t position_;
  std::string detail_;
};

/// A brute-force computation would exceed its work budget.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must hold did not.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace rsc
