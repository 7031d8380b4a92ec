#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vital {

/// Malformed edge-list input. `line()` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A computation whose preconditions on the graph or parameters do not hold.
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Power iteration gave up before reaching its tolerance.
class ConvergenceError : public ComputeError {
 public:
  ConvergenceError(const std::string& what, double residual, int iterations)
      : ComputeError(what + " (residual " + std::to_string(residual) + " after " +
                     std::to_string(iterations) + " iterations)"),
        residual_(residual),
        iterations_(iterations) {}

  double residual() const noexcept { return residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

}  // namespace vital
