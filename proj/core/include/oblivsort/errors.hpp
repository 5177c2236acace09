#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oblivsort {

/// Thrown when a sort is asked for a length the halving offset schedule does
/// not support: n >= 2 that is not a power of two. Lengths 0 and 1 are
/// accepted everywhere as no-ops.
class UnsupportedLengthError : public std::invalid_argument {
 public:
  explicit UnsupportedLengthError(std::size_t n)
      : std::invalid_argument("unsupported length " + std::to_string(n) +
                              ": expected 0, 1, or a power of two"),
        n_(n) {}

  std::size_t length() const noexcept { return n_; }

 private:
  std::size_t n_;
};

/// Malformed file content. Carries the 1-based line number of the offending
/// line so callers can report it.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ": line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace oblivsort
