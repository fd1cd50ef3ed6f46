#pragma once

#include <vector>

#include "whitham/solver.hpp"

namespace whitham {

/// Record of one period-to-infinity sweep at fixed relative height.
struct PeriodSweep {
  double lambda = 0.0;
  double window = 0.0;
  std::vector<PeriodicWave> waves;        // at strictly increasing periods
  std::vector<double> speed_history;      // mu_P per entry
  std::vector<double> speed_diffs;        // |mu_{i+1} - mu_i|
  std::vector<double> profile_diffs;      // sup over [-W, W] of successive profiles
  double richardson_speed = 0.0;          // Aitken diagnostic over the last three mu_P
  bool converged = false;

  const PeriodicWave& final_wave() const { return waves.back(); }
};

struct SweepOptions {
  double tol = 1e-5;            // convergence threshold on both diff sequences
  int window_samples_per_unit = 64;
  int min_entries = 3;
  SolverOptions solver{};
};

/// Solitary wave assembled from a converged sweep: the pre-limit profile
/// shifted by the Galilean transform, with decay diagnostics.
struct SolitaryWave {
  double lambda = 0.0;
  double speed = 0.0;           // mu = 2 - nu, supercritical
  double nu = 0.0;              // pre-transform limit speed
  double alpha = 0.0;           // relative height phi(0)/(mu/2)
  double eta = 0.0;             // fitted decay rate
  double eta_fit_r2 = 0.0;
  double window = 0.0;
  double sample_dx = 0.0;
  std::vector<double> samples;  // profile on x = i*sample_dx, i = 0..n (even side)
  double residual_norm = 0.0;   // of the final periodic solve
  double final_period = 0.0;
  int final_nodes = 0;

  double value(double x) const;     // linear interpolation of |x| within the window
  double crest() const { return samples.front(); }
};

struct DecayFit {
  double eta = 0.0;
  double r_squared = 0.0;
  bool poor_fit = false;  // r_squared below 0.99
};

/// Solve at each scheduled period (warm-started by re-periodizing), recording
/// speeds and windowed profiles; declares convergence when both the speed and
/// the windowed-profile differences drop below tol (with at least min_entries
/// waves). Throws NonConvergenceError with the history if the schedule runs out.
PeriodSweep period_sweep(double lambda, const std::vector<double>& schedule,
                         double window, const SweepOptions& opts = {});

/// The exact symmetry (phi, nu) -> (phi + 1 - nu, 2 - nu) of the steady equation.
std::pair<std::vector<double>, double> galilean_transform(const std::vector<double>& profile,
                                                          double nu);

/// Package the converged sweep into a SolitaryWave; asserts every bound
/// (positivity, evenness window monotonicity, speed window, crest identity,
/// height-parameter consistency) and throws ConstructionError naming the
/// first violated one.
SolitaryWave extract_solitary(const PeriodSweep& sweep, const SweepOptions& opts = {});

/// Least-squares slope of -log(phi) against |x| over [lo, hi] given uniform
/// samples; throws DomainError on non-positive tail samples.
DecayFit fit_decay_rate(const std::vector<double>& samples, double dx, double lo, double hi);

/// Closed-form bijection between the pre- and post-transform height parameters
/// at fixed speed mu in (1, 2); mu = 2 throws SingularityError.
double lambda_from_alpha(double alpha, double mu);
double alpha_from_lambda(double lambda, double mu);

/// Trapezoid integrals of phi and phi^2 over the sample window plus analytic
/// exponential tail corrections with the fitted rate.
struct WaveIntegrals {
  double integral = 0.0;         // int phi
  double integral_squared = 0.0; // int phi^2
};
WaveIntegrals tail_corrected_integrals(const SolitaryWave& wave);

}  // namespace whitham
