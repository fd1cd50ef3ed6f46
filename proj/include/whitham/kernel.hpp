#pragma once

#include <cstddef>

#include "whitham/symbol.hpp"

namespace whitham {

struct KernelConfig {
  double quadrature_tol = 1e-12;  // absolute tolerance of the Fourier-integral quadratures
  double tail_cutoff = 40.0;      // truncation of the regular-part integral in xi
  double s0 = 1.0;                // decay-rate constant in (0, pi/2) used in tail bounds
  double tail_constant = 1.0;     // constant C in the tail bound C*exp(-s0*|x|)
};

/// Pointwise evaluation of the convolution kernel K, split as
/// K(x) = 1/sqrt(2*pi*|x|) + K_reg(x) with K_reg smooth across 0.
/// K_reg is the inverse Fourier cosine transform of m(xi) - |xi|^{-1/2}; after
/// the substitution xi = t^2 the integrand (2 t m(t^2) - 2) cos(x t^2) is
/// bounded and decays like exp(-2 t^2).
class KernelEvaluator {
 public:
  explicit KernelEvaluator(KernelConfig cfg = {}, WhithamSymbol symbol = {})
      : cfg_(cfg), symbol_(symbol) {}

  /// K(x) for x != 0; throws SingularityError at x = 0.
  double point(double x) const;

  /// Smooth part K_reg(x); defined for all x including 0.
  double regular(double x) const;

  /// Integral of K over [-R, R]; the |x|^{-1/2} part integrates in closed
  /// form, the rest collapses to a single xi-space quadrature.
  double mass(double R) const;

  /// Integral of K(y)*|y|^{1/2} over |y| <= delta (bounded integrand).
  double weighted_integral(double delta) const;

  const KernelConfig& config() const { return cfg_; }
  const WhithamSymbol& symbol() const { return symbol_; }

 private:
  KernelConfig cfg_;
  WhithamSymbol symbol_;
};

/// The P-periodization of K under two cross-checked representations:
/// a lattice sum of K with certified truncation, and a Fourier series whose
/// slowly-converging |xi|^{-1/2} part is summed through an integral
/// representation of sum_n cos(n*theta)/sqrt(n).
class PeriodizedKernel {
 public:
  enum class Method { spatial, fourier };

  PeriodizedKernel(double period, const KernelEvaluator& kernel,
                   int n_terms_spatial = 0, int n_modes_fourier = 0);

  /// K_P(x) for x not on the period lattice; throws SingularityError there.
  double operator()(double x, Method method) const;

  /// Smooth part K_{P,reg}(x) = K_P(x) - 1/sqrt(2*pi*|x_0|) with x_0 the
  /// lattice reduction of x to [-P/2, P/2]; defined on the whole line.
  double regular(double x) const;

  double period() const { return period_; }
  int n_terms_spatial() const { return n_terms_spatial_; }
  int n_modes_fourier() const { return n_modes_fourier_; }

 private:
  double spatial(double x) const;   // |x| <= P/2, x != 0
  double fourier(double x) const;   // |x| <= P/2, x != 0

  double period_;
  const KernelEvaluator& kernel_;
  int n_terms_spatial_;
  int n_modes_fourier_;
};

/// sum_{n>=1} cos(n*theta)/sqrt(n) for theta in (0, 2*pi), via the Laplace
/// integral representation of n^{-1/2} (no special functions needed).
double half_power_cosine_sum(double theta, double abs_tol = 1e-13);

}  // namespace whitham
