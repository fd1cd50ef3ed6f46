#include "whitham/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "whitham/errors.hpp"
#include "whitham/operators.hpp"

namespace whitham {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct NewtonState {
  std::vector<double> coeffs;
  double mu = 0.0;
  double residual_norm = 0.0;
  int iterations = 0;
};

double sup_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::fabs(x));
  return s;
}

/// Nodal sup-norm of the coefficient-space residual.
double residual_sup(const PeriodicGrid& g, const std::vector<double>& rc) {
  return sup_norm(cosine_synthesis(g, rc));
}

std::vector<double> residual_coeffs(const std::vector<double>& a, double mu,
                                    const std::vector<double>& mk) {
  auto r = product_coeffs(a, a);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += (mk[k] - mu) * a[k];
  return r;
}

NewtonState newton_core(const PeriodicGrid& g, std::vector<double> a, double mu,
                        double lambda, const SolverOptions& opts) {
  const int M = g.modes();
  const auto mk = multiplier_table(g, opts.symbol);
  const int n = M + 2;
  Eigen::MatrixXd J(n, n);
  Eigen::VectorXd F(n), delta(n);

  auto rc = residual_coeffs(a, mu, mk);
  double rn = residual_sup(g, rc);
  double constraint = 0.0;
  for (double ak : a) constraint += ak;
  constraint -= lambda * mu / 2.0;

  for (int it = 0; it <= opts.max_iter; ++it) {
    if (rn <= opts.tol &&
        std::fabs(constraint) <= opts.height_tol * std::max(1.0, std::fabs(mu))) {
      return {std::move(a), mu, rn, it};
    }
    if (it == opts.max_iter) break;

    const auto C = product_matrix(a);
    for (int m = 0; m <= M; ++m) {
      for (int k = 0; k <= M; ++k) J(m, k) = 2.0 * C[m][k];
      J(m, m) += mk[m] - mu;
      J(m, M + 1) = -a[m];
      F(m) = rc[m];
    }
    for (int k = 0; k <= M; ++k) J(M + 1, k) = 1.0;
    J(M + 1, M + 1) = -lambda / 2.0;
    F(M + 1) = constraint;

    Eigen::PartialPivLU<Eigen::Ref<Eigen::MatrixXd>> lu(J);
    delta = lu.solve(-F);
    if (!delta.allFinite()) {
      throw SingularJacobianError("newton: bordered Jacobian solve produced non-finite step");
    }

    // Backtrack if a full step makes things much worse (keeps the linear
    // height constraint satisfied for any step length once it is).
    double alpha = 1.0;
    std::vector<double> a_try(a.size());
    for (int bt = 0;; ++bt) {
      for (int k = 0; k <= M; ++k) a_try[k] = a[k] + alpha * delta(k);
      const double mu_try = mu + alpha * delta(M + 1);
      auto rc_try = residual_coeffs(a_try, mu_try, mk);
      const double rn_try = residual_sup(g, rc_try);
      if (rn_try <= 10.0 * rn || bt >= 4 || !(std::isfinite(rn_try))) {
        a.swap(a_try);
        mu = mu_try;
        rc = std::move(rc_try);
        rn = rn_try;
        break;
      }
      alpha *= 0.5;
    }
    if (!std::isfinite(rn)) {
      throw DivergenceError("newton: residual became non-finite", a, mu, rn);
    }
    constraint = 0.0;
    for (double ak : a) constraint += ak;
    constraint -= lambda * mu / 2.0;
  }
  throw DivergenceError("newton: no convergence within max_iter", a, mu, rn);
}

PeriodicWave make_wave(const PeriodicGrid& g, NewtonState state, double lambda,
                       const SolverOptions& opts, bool cusp_mode) {
  PeriodicWave w;
  w.period = g.period;
  w.lambda = lambda;
  w.speed = state.mu;
  w.residual_norm = state.residual_norm;
  w.cusp_mode = cusp_mode;
  w.profile = EvenPeriodicFunction::from_coeffs(g, std::move(state.coeffs));
  validate_wave(w, opts);
  return w;
}

/// Loose on-branch test used while continuing; rejects basin jumps (wrong
/// sign of nonlinearity, supercritical speeds) without tripping on
/// Gibbs-level ringing of nearly-cusped profiles.
bool on_branch(const PeriodicGrid& g, const NewtonState& s, double lambda,
               double gate) {
  if (!(s.mu > 1e-6 && s.mu <= 1.0)) return false;
  const auto& v = cosine_synthesis(g, s.coeffs);
  double vmax = v[0], vmin = v[0], ring = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    vmax = std::max(vmax, v[i]);
    vmin = std::min(vmin, v[i]);
    ring = std::max(ring, v[i] - v[i - 1]);  // crest-to-trough ordering
  }
  if (vmax > v[0] + gate) return false;
  if (vmin < s.mu - 1.0 - gate) return false;
  if (ring > gate) return false;
  return true;
}

NewtonState to_state(const PeriodicWave& w) {
  return {w.profile.coeffs, w.speed, w.residual_norm, 0};
}

/// March lambda from (a, mu) at lam0 to target with adaptive gated steps.
NewtonState lambda_chain(const PeriodicGrid& g, NewtonState s, double lam0,
                         double lam_target, const SolverOptions& opts) {
  double lam = lam0;
  double step = 0.05;
  const double cap_hi = 0.025;  // finer steps close to the extreme wave
  NewtonState prev = s;
  double lam_prev = lam;
  while (lam < lam_target - 1e-14) {
    const double cap = (lam > 0.9) ? cap_hi : 0.1;
    const double next = std::min(lam + step, lam_target);
    // secant predictor in lambda once two accepted points exist
    NewtonState guess = s;
    if (lam_prev < lam) {
      const double t = (next - lam) / (lam - lam_prev);
      for (std::size_t k = 0; k < guess.coeffs.size(); ++k) {
        guess.coeffs[k] += t * (s.coeffs[k] - prev.coeffs[k]);
      }
      guess.mu += t * (s.mu - prev.mu);
    }
    bool accepted = false;
    try {
      NewtonState trial = newton_core(g, guess.coeffs, guess.mu, next, opts);
      if (on_branch(g, trial, next, opts.basin_gate)) {
        prev = std::move(s);
        lam_prev = lam;
        s = std::move(trial);
        lam = next;
        accepted = true;
      }
    } catch (const DivergenceError&) {
    } catch (const SingularJacobianError&) {
    }
    if (accepted) {
      step = std::min(cap, step * 1.5);
    } else {
      step *= 0.5;
      if (step < opts.lambda_step_floor) {
        throw ContinuationStallError("lambda continuation stalled", lam);
      }
    }
  }
  return s;
}

/// Cold start at a period small enough for the small-amplitude basin.
NewtonState cold_start(const PeriodicGrid& g, double lambda, const SolverOptions& opts) {
  auto [f0, mu0] = initial_guess(g, lambda * bifurcation_speed(g.period, 1, opts.symbol) / 2.0,
                                 opts.symbol);
  NewtonState s = newton_core(g, f0.coeffs, mu0, lambda, opts);
  if (!on_branch(g, s, lambda, opts.basin_gate)) {
    throw ConstructionError("cold start left the subcritical branch");
  }
  return s;
}

int round_up_mult4(double x) {
  int n = static_cast<int>(std::ceil(x));
  return ((n + 3) / 4) * 4;
}

}  // namespace

double PeriodicWave::tail_estimate() const {
  const auto& a = profile.coeffs;
  double t = 0.0;
  for (std::size_t k = a.size() >= 4 ? a.size() - 4 : 0; k < a.size(); ++k) {
    t = std::max(t, std::fabs(a[k]));
  }
  return t;
}

double bifurcation_speed(double period, int k, const WhithamSymbol& m) {
  if (!(period > 0.0)) throw DomainError("bifurcation_speed: period must be positive");
  if (k <= 0) throw DomainError("bifurcation_speed: mode index must be positive");
  return m(kTwoPi * k / period);
}

std::pair<EvenPeriodicFunction, double> initial_guess(const PeriodicGrid& g, double eps,
                                                      const WhithamSymbol& m) {
  if (eps < 0.0 || eps > 0.05 + 1e-12) {
    throw PreconditionError("initial_guess: eps must lie in [0, 0.05]");
  }
  std::vector<double> a(g.modes() + 1, 0.0);
  a[0] = eps / 2.0;
  a[1] = eps / 2.0;
  return {EvenPeriodicFunction::from_coeffs(g, std::move(a)),
          bifurcation_speed(g.period, 1, m)};
}

PeriodicWave newton_solve(const std::pair<EvenPeriodicFunction, double>& guess,
                          double lambda, const SolverOptions& opts) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw PreconditionError("newton_solve: lambda must lie in (0, 1]");
  }
  if (!(opts.tol > 0.0)) throw PreconditionError("newton_solve: tol must be positive");
  const PeriodicGrid g = guess.first.grid;
  NewtonState s = newton_core(g, guess.first.coeffs, guess.second, lambda, opts);
  return make_wave(g, std::move(s), lambda, opts, lambda > 0.9);
}

int default_node_count(double period, double lambda) {
  const double density = (lambda <= 0.7) ? 16.0 : (lambda <= 0.85 ? 32.0 : 64.0);
  const int floor_n = (lambda <= 0.8) ? 512 : (lambda <= 0.9 ? 2048 : 4096);
  return std::max(round_up_mult4(period * density), floor_n);
}

Branch continue_in_lambda(double period, const std::vector<double>& lambda_grid,
                          const SolverOptions& opts, std::optional<int> n_nodes) {
  if (lambda_grid.empty()) throw PreconditionError("continuation: empty lambda grid");
  for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
    if (!(lambda_grid[i] > 0.0 && lambda_grid[i] <= 1.0)) {
      throw PreconditionError("continuation: lambda values must lie in (0, 1]");
    }
    if (i > 0 && !(lambda_grid[i] > lambda_grid[i - 1])) {
      throw PreconditionError("continuation: lambda grid must be increasing");
    }
  }
  Branch branch;
  branch.period = period;
  PeriodicWave w = solve_periodic(period, lambda_grid.front(), opts,
                                  n_nodes ? *n_nodes
                                          : default_node_count(period, lambda_grid.back()));
  branch.points.push_back(w);
  const PeriodicGrid g = w.profile.grid;
  NewtonState s = to_state(w);
  double lam = lambda_grid.front();
  for (std::size_t i = 1; i < lambda_grid.size(); ++i) {
    s = lambda_chain(g, std::move(s), lam, lambda_grid[i], opts);
    lam = lambda_grid[i];
    branch.points.push_back(make_wave(g, s, lam, opts, lam > 0.9));
  }
  return branch;
}

PeriodicWave refine(const PeriodicWave& wave, int n_nodes_fine, const SolverOptions& opts) {
  if (n_nodes_fine <= wave.profile.grid.n_nodes) {
    throw ShapeError("refine: target node count must exceed the current one");
  }
  const PeriodicGrid g(wave.period, n_nodes_fine);
  std::vector<double> a(g.modes() + 1, 0.0);
  for (std::size_t k = 0; k < wave.profile.coeffs.size(); ++k) a[k] = wave.profile.coeffs[k];
  NewtonState s = newton_core(g, std::move(a), wave.speed, wave.lambda, opts);
  return make_wave(g, std::move(s), wave.lambda, opts, wave.cusp_mode);
}

EvenPeriodicFunction reperiodize(const PeriodicWave& wave, const PeriodicGrid& target) {
  const double half_prev = wave.period / 2.0;
  const double trough = wave.profile(half_prev);
  std::vector<double> v(target.modes() + 1);
  for (int i = 0; i <= target.modes(); ++i) {
    const double x = target.half_node(i);
    v[i] = (x <= half_prev) ? wave.profile(x) : trough;
  }
  return EvenPeriodicFunction::from_values(target, std::move(v));
}

PeriodicWave solve_periodic(double period, double lambda, const SolverOptions& opts,
                            std::optional<int> n_nodes) {
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    throw PreconditionError("solve_periodic: lambda must lie in (0, 1]");
  }
  const int N = n_nodes ? *n_nodes : default_node_count(period, lambda);
  const double lam_seed = std::min(lambda, 0.1);
  const double density = std::max(16.0, static_cast<double>(N) / period);

  // seed period: halve until the small-amplitude guess is in-basin
  double p0 = period;
  while (p0 > 16.0) p0 /= 2.0;
  auto grid_for = [&](double p) {
    return (std::fabs(p - period) < 1e-12)
               ? PeriodicGrid(period, N)
               : PeriodicGrid(p, std::max(round_up_mult4(p * density), 128));
  };

  PeriodicGrid g = grid_for(p0);
  NewtonState s = cold_start(g, lam_seed, opts);
  for (double p = p0; p < period - 1e-12;) {
    const double p_next = std::min(2.0 * p, period);
    const PeriodicGrid g_next = grid_for(p_next);
    PeriodicWave carrier = make_wave(g, s, lam_seed, opts, false);
    EvenPeriodicFunction guess = reperiodize(carrier, g_next);
    s = newton_core(g_next, guess.coeffs, s.mu, lam_seed, opts);
    if (!on_branch(g_next, s, lam_seed, opts.basin_gate)) {
      throw ConstructionError("period doubling left the subcritical branch");
    }
    g = g_next;
    p = p_next;
  }
  if (lambda > lam_seed + 1e-14) {
    s = lambda_chain(g, std::move(s), lam_seed, lambda, opts);
  }
  return make_wave(g, std::move(s), lambda, opts, lambda > 0.9);
}

void validate_wave(const PeriodicWave& wave, const SolverOptions& opts) {
  const auto& v = wave.profile.values;
  const double mu = wave.speed;
  if (!(mu > 0.0 && mu <= 1.0)) {
    throw ConstructionError("wave bound violated: speed outside (0, 1]");
  }
  const double crest = v.front();
  if (std::fabs(crest - wave.lambda * mu / 2.0) >
      opts.height_tol * std::max(1.0, std::fabs(mu))) {
    throw ConstructionError("wave bound violated: height constraint phi(0) = lambda*mu/2");
  }
  // Near the extreme wave the discrete object cannot certify bounds below its
  // own truncation level; widen the slack by the spectral tail there.
  const double tail = wave.tail_estimate();
  const double slack = wave.cusp_mode ? std::max(opts.bound_tol, 50.0 * tail)
                                      : std::max(opts.bound_tol, 10.0 * tail);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > crest + slack) {
      throw ConstructionError("wave bound violated: profile exceeds the crest value");
    }
    if (v[i] < mu - 1.0 - slack) {
      throw ConstructionError("wave bound violated: profile below mu - 1");
    }
    if (i > 0 && v[i] - v[i - 1] > slack) {
      throw ConstructionError("wave bound violated: profile not monotone on (-P/2, 0)");
    }
  }
}

}  // namespace whitham
