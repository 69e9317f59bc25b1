#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pk {

/// Malformed notation. `position` is the byte offset in the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Input is well formed but outside the domain of the operation
/// (a link where a knot is required, precrossings where none are allowed, ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace pk
