#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alex3 {

/// Raised by the tuple parser; carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// Invalid input to an operation (illegal tuple, bad count arguments, ...).
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A move was requested on a tuple where it is not enabled.
class MoveError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Connected sum: every facet of a summand touches a singular vertex.
class NoRegularFacetError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// A vertex link is neither a 2-sphere nor a projective plane.
class MalformedLinkError : public DomainError {
  public:
    using DomainError::DomainError;
};

} // namespace alex3
