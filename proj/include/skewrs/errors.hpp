#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewrs {

/// Malformed element, polynomial or configuration text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Division by zero, singular systems and similar exact-arithmetic failures.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace skewrs
