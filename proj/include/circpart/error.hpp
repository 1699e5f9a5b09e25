#pragma once

#include <stdexcept>
#include <string>

namespace circpart {

// Input violates the precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input exceeds a hard enumeration cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace circpart
