#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace whitham {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside the mathematical domain of an operation (NaN, empty tail, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Pointwise evaluation requested exactly on a singularity of the integrand/kernel.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A quadrature did not reach the requested tolerance; carries what it achieved.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double achieved)
      : Error(what), achieved_tolerance(achieved) {}
  double achieved_tolerance;
};

/// Inconsistent array lengths / grid sizes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Newton iteration ran out of iterations; carries the last iterate.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, std::vector<double> coeffs, double speed,
                  double residual)
      : Error(what), last_coeffs(std::move(coeffs)), last_speed(speed),
        last_residual(residual) {}
  std::vector<double> last_coeffs;
  double last_speed;
  double last_residual;
};

/// Linear solve of the Newton system failed (fold / bifurcation point).
class SingularJacobianError : public Error {
 public:
  using Error::Error;
};

/// Parameter continuation hit the step floor; carries the last good parameter.
class ContinuationStallError : public Error {
 public:
  ContinuationStallError(const std::string& what, double last_good)
      : Error(what), last_good_lambda(last_good) {}
  double last_good_lambda;
};

/// A period sweep exhausted its schedule; carries the recorded speed history.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, std::vector<double> periods,
                      std::vector<double> speeds)
      : Error(what), periods(std::move(periods)), speeds(std::move(speeds)) {}
  std::vector<double> periods;
  std::vector<double> speeds;
};

/// A constructed object violates one of its stated bounds; names the bound.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A required precondition on the inputs does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Document parsing / schema mismatch.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Samples do not span the resolution needed for a fit.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace whitham
