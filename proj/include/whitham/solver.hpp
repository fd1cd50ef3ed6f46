#pragma once

#include <optional>
#include <vector>

#include "whitham/grid.hpp"
#include "whitham/symbol.hpp"

namespace whitham {

struct SolverOptions {
  double tol = 1e-11;             // residual sup-norm target
  int max_iter = 50;
  double lambda_step_floor = 1e-4;
  double height_tol = 1e-12;      // |phi(0) - lambda*mu/2| <= height_tol*max(1,mu)
  double bound_tol = 1e-10;       // slack for the two-sided profile bounds
  double basin_gate = 1e-4;       // slack for rejecting off-branch iterates
  WhithamSymbol symbol{};
};

/// One computed P-periodic wave of relative height lambda: the crest sits at
/// x = 0 with phi(0) = lambda*mu/2, and mu is the (subcritical) wave speed.
struct PeriodicWave {
  double period = 0.0;
  double lambda = 0.0;
  double speed = 0.0;
  EvenPeriodicFunction profile;
  double residual_norm = 0.0;
  bool cusp_mode = false;  // near-extreme wave; bound checks use the spectral tail

  /// Size of the unresolved spectral tail (max |a_k| over the last few modes).
  double tail_estimate() const;
};

/// lambda-ordered family of waves at one period.
struct Branch {
  double period = 0.0;
  std::vector<PeriodicWave> points;
};

/// Speed at which cosine mode k turns neutral for the linearization at zero.
double bifurcation_speed(double period, int k, const WhithamSymbol& m = {});

/// Small-amplitude seed: profile (eps/2)*(1 + cos(2*pi*x/P)) with crest value
/// eps, paired with the mode-1 bifurcation speed.
std::pair<EvenPeriodicFunction, double> initial_guess(const PeriodicGrid& g, double eps,
                                                      const WhithamSymbol& m = {});

/// Newton solve of the height-constrained system
///   (m_k - mu) a_k + [a*a]_k = 0  (k = 0..M),   sum_k a_k - lambda*mu/2 = 0
/// for (a, mu), starting from the given guess. Throws DivergenceError with
/// the last iterate attached, or SingularJacobianError if the bordered system
/// cannot be solved reliably.
PeriodicWave newton_solve(const std::pair<EvenPeriodicFunction, double>& guess,
                          double lambda, const SolverOptions& opts = {});

/// Default resolution policy: nodes per unit length grow toward the extreme
/// wave, with floors matching the P ~ 2*pi regime.
int default_node_count(double period, double lambda);

/// March lambda over an increasing grid, warm-starting each solve (secant
/// predictor once two points exist) and bisecting rejected steps down to the
/// step floor. The first grid point is seeded from the small-amplitude guess
/// through an internal lambda chain.
Branch continue_in_lambda(double period, const std::vector<double>& lambda_grid,
                          const SolverOptions& opts = {},
                          std::optional<int> n_nodes = std::nullopt);

/// Re-solve a converged wave on a finer grid (zero-padded interpolant seed).
PeriodicWave refine(const PeriodicWave& wave, int n_nodes_fine,
                    const SolverOptions& opts = {});

/// Convenience: one wave at (P, lambda) with automatic seeding. Large periods
/// are reached by doubling from a moderate seed period (re-periodizing the
/// profile), avoiding the spurious-branch basins of cold starts.
PeriodicWave solve_periodic(double period, double lambda, const SolverOptions& opts = {},
                            std::optional<int> n_nodes = std::nullopt);

/// Embed a wave's profile into a longer period (tail extended by the trough
/// value), sampled on the target grid.
EvenPeriodicFunction reperiodize(const PeriodicWave& wave, const PeriodicGrid& target);

/// Validation used for every accepted wave; throws ConstructionError naming
/// the violated bound. Near-extreme waves (cusp_mode) scale the monotonicity
/// and bound slacks by the spectral tail.
void validate_wave(const PeriodicWave& wave, const SolverOptions& opts);

}  // namespace whitham
