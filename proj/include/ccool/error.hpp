#pragma once

#include <stdexcept>
#include <string>

namespace ccool {

// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input to a numerical routine (wrong shape, non-unitary, non-Hermitian, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A physical parameter violates its constraint (negative splitting, tau < 0, ...).
class PhysicsError : public Error {
 public:
  using Error::Error;
};

// Syntax or schema problem in a run configuration file.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& msg, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace ccool
