#pragma once

#include <functional>

namespace whitham {

/// Adaptive Gauss-Kronrod integration of f over [a, b] to absolute tolerance.
/// Throws AccuracyError (with the achieved error attached) if the estimate
/// cannot be trusted at the requested level.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth = 15);

}  // namespace whitham
