#pragma once

#include <stdexcept>
#include <string>

namespace frenetbv {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (bad index, non-unit axis,
// wrong dimension, jumps passed to a jump-free solver, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Jump data is outside the admissible range (magnitude >= pi, non-increasing
// angle function where one is required).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A numerical invariant failed (frame left SO(n), singular Cayley argument).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed scenario file. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, std::string field)
      : Error(format(message, line, field)), line_(line), field_(std::move(field)) {}

  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(const std::string& message, int line,
                            const std::string& field) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!field.empty()) out += "'" + field + "': ";
    return out + message;
  }

  int line_;
  std::string field_;
};

}  // namespace frenetbv
