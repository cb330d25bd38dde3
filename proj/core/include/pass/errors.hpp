#pragma once

#include <stdexcept>
#include <string>

namespace pass {

// Root of every exception thrown by the library. The CLI maps the concrete
// subclasses onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user-supplied parameters or scenario files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// V >= pi/2: the slab supports more than the fundamental even mode.
class MultimodeError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// V <= 0: no guided mode.
class NoGuidedModeError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// Argument outside the domain of a piecewise model (e.g. x outside [0, L]).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotImplementedError : public Error {
 public:
  using Error::Error;
};

class SolverError : public Error {
 public:
  SolverError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// A numerically degenerate result: all-zero pattern, zero distance, NaN...
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace pass
