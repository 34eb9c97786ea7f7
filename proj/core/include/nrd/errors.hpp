#pragma once

#include <stdexcept>
#include <string>

namespace nrd {

/// Stationary distribution is not unique (reducible chain).
class MultiplicityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Table or kernel dimensions do not line up.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Iterative solver did not reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Root bracketing failed or collapsed without meeting tolerance.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tilted row lost all probability mass.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested enumeration exceeds the configured entry budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::size_t required, std::size_t allowed)
      : std::runtime_error(what), required_(required), allowed_(allowed) {}
  std::size_t required() const noexcept { return required_; }
  std::size_t allowed() const noexcept { return allowed_; }

 private:
  std::size_t required_;
  std::size_t allowed_;
};

/// Scheme composition does not reduce to the assumed dependence structure.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nrd
