#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parcov {

/// Base class for every error the library raises on bad input or exhausted resources.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid instance, query or parameter. The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the offending 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A configured cap (node budget, DP width, oracle size) was exceeded.
/// The CLI maps this to exit code 3. Never a verdict.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace parcov
