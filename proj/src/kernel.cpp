#include "whitham/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "whitham/errors.hpp"
#include "whitham/quadrature.hpp"

namespace whitham {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double KernelEvaluator::regular(double x) const {
  const double ax = std::fabs(x);
  const double tmax = std::sqrt(cfg_.tail_cutoff);
  const auto& m = symbol_;
  auto integrand = [ax, &m](double t) {
    return (2.0 * t * m(t * t) - 2.0) * std::cos(ax * t * t);
  };
  const double v = integrate(integrand, 0.0, tmax, cfg_.quadrature_tol);
  return v / M_PI;
}

double KernelEvaluator::point(double x) const {
  if (!std::isfinite(x)) throw DomainError("kernel: non-finite argument");
  if (x == 0.0) throw SingularityError("kernel: K(0) is singular");
  const double ax = std::fabs(x);
  return 1.0 / std::sqrt(kTwoPi * ax) + regular(ax);
}

double KernelEvaluator::mass(double R) const {
  if (!(R > 0.0)) throw DomainError("kernel mass: R must be positive");
  // int_{-R}^{R} K = 2*sqrt(2R/pi) + 2*int_0^R K_reg. Swapping the order of
  // the x and xi integrals turns the second term into a single quadrature:
  // int_0^R K_reg = (1/pi) int_0^inf (m(xi)-xi^{-1/2}) sin(R xi)/xi dxi.
  const double tmax = std::sqrt(cfg_.tail_cutoff);
  const auto& m = symbol_;
  auto integrand = [R, &m](double t) {
    const double t2 = t * t;
    const double damped_sinc = (t > 1e-8) ? std::sin(R * t2) / t2 : R;
    return (2.0 * t * m(t2) - 2.0) * damped_sinc;
  };
  const double reg = integrate(integrand, 0.0, tmax, cfg_.quadrature_tol) / M_PI;
  return 2.0 * std::sqrt(2.0 * R / M_PI) + 2.0 * reg;
}

double KernelEvaluator::weighted_integral(double delta) const {
  if (!(delta > 0.0)) throw DomainError("weighted integral: delta must be positive");
  // K(y)*sqrt(y) = 1/sqrt(2*pi) + sqrt(y)*K_reg(y); with y = u^2 the second
  // term becomes 4*int u^2 K_reg(u^2) du, a smooth integrand.
  auto integrand = [this](double u) { return u * u * regular(u * u); };
  const double v = integrate(integrand, 0.0, std::sqrt(delta),
                             std::max(cfg_.quadrature_tol, 1e-11), 12);
  return 2.0 * (delta / std::sqrt(kTwoPi) + 2.0 * v);
}

double half_power_cosine_sum(double theta, double abs_tol) {
  const double c = std::cos(theta);
  auto integrand = [c](double u) {
    const double e1 = std::exp(-u * u);
    const double e2 = e1 * e1;
    return (e1 * c - e2) / (1.0 - 2.0 * e1 * c + e2);
  };
  return 2.0 / std::sqrt(M_PI) * integrate(integrand, 0.0, 7.0, abs_tol);
}

PeriodizedKernel::PeriodizedKernel(double period, const KernelEvaluator& kernel,
                                   int n_terms_spatial, int n_modes_fourier)
    : period_(period), kernel_(kernel) {
  if (!(period > 0.0)) throw DomainError("periodized kernel: period must be positive");
  const auto& cfg = kernel_.config();
  if (n_terms_spatial <= 0) {
    // Smallest n with 2*C*exp(-s0*(n*P - P/2)) / (1 - exp(-s0*P)) < 1e-12.
    const double denom = 1.0 - std::exp(-cfg.s0 * period);
    const double need = std::log(2.0 * cfg.tail_constant / (1e-12 * denom));
    n_terms_spatial = static_cast<int>(std::ceil(need / (cfg.s0 * period) + 0.5)) + 1;
  }
  if (n_modes_fourier <= 0) {
    // Remainder |m(xi)-xi^{-1/2}| <= xi^{-1/2} exp(-2 xi) at xi = 2*pi*n/P.
    n_modes_fourier = static_cast<int>(std::ceil(period * 2.6)) + 8;
  }
  n_terms_spatial_ = n_terms_spatial;
  n_modes_fourier_ = n_modes_fourier;
}

double PeriodizedKernel::operator()(double x, Method method) const {
  if (!std::isfinite(x)) throw DomainError("periodized kernel: non-finite argument");
  double r = std::remainder(x, period_);  // in [-P/2, P/2]
  if (r == 0.0) throw SingularityError("periodized kernel: x on the period lattice");
  return method == Method::spatial ? spatial(r) : fourier(r);
}

double PeriodizedKernel::spatial(double x) const {
  double sum = 0.0;
  for (int n = n_terms_spatial_; n >= 1; --n) {
    sum += kernel_.point(x + n * period_) + kernel_.point(x - n * period_);
  }
  return sum + kernel_.point(x);
}

double PeriodizedKernel::fourier(double x) const {
  const double P = period_;
  double theta = kTwoPi * x / P;
  if (theta < 0.0) theta += kTwoPi;  // evenness: reduce to (0, 2*pi)
  const auto& m = kernel_.symbol();
  double sum = 0.0;
  for (int n = n_modes_fourier_; n >= 1; --n) {
    const double xi = kTwoPi * n / P;
    sum += (m(xi) - 1.0 / std::sqrt(xi)) * std::cos(n * theta);
  }
  sum += std::sqrt(P / kTwoPi) * half_power_cosine_sum(theta);
  return 1.0 / P + 2.0 / P * sum;
}

double PeriodizedKernel::regular(double x) const {
  double r = std::remainder(x, period_);
  double sum = 0.0;
  for (int n = n_terms_spatial_; n >= 1; --n) {
    sum += kernel_.point(r + n * period_) + kernel_.point(r - n * period_);
  }
  return sum + kernel_.regular(r);
}

}  // namespace whitham
