#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace riesz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The positivity region {lambda > sigma} is empty.
class EmptyRegionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Adaptive quadrature stopped before reaching the requested tolerance.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// The requested grid cannot represent the operator within the kinetic cap.
class InfeasibleGridError : public Error {
 public:
  using Error::Error;
};

/// Grid refinement did not reach the drift tolerance within its budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> drift_trace)
      : Error(what), trace_(std::move(drift_trace)) {}
  const std::vector<double>& drift_trace() const noexcept { return trace_; }

 private:
  std::vector<double> trace_;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

/// A query lies beyond the range where a spectrum is converged.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A grid or integration domain is too coarse or too narrow for the request.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace riesz
