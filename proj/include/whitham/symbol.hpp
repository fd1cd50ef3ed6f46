#pragma once

#include <array>
#include <cstddef>

namespace whitham {

/// Fourier multiplier m(xi) = sqrt(tanh(xi)/xi) of the nonlocal operator L.
///
/// The removable singularity at xi = 0 is evaluated through an even Taylor
/// expansion below a configurable cutoff; above it the closed form applies.
/// m is even, takes values in (0, 1], equals 1 only at xi = 0, and is strictly
/// decreasing in |xi|.
class WhithamSymbol {
 public:
  WhithamSymbol() = default;
  explicit WhithamSymbol(double cutoff) : cutoff_(cutoff) {}

  /// m(xi); throws DomainError on non-finite input.
  double operator()(double xi) const;

  double cutoff() const { return cutoff_; }

  /// Even-power expansion coefficients of m at 0 (1, xi^2, ..., xi^8).
  static constexpr std::array<double, 5> taylor_coeffs() {
    return {1.0, -1.0 / 6.0, 19.0 / 360.0, -55.0 / 3024.0, 11813.0 / 1814400.0};
  }

 private:
  double cutoff_ = 1e-2;
};

}  // namespace whitham
