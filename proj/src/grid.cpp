#include "whitham/grid.hpp"

#include <cmath>

#include "whitham/dct.hpp"
#include "whitham/errors.hpp"

namespace whitham {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

PeriodicGrid::PeriodicGrid(double P, int N) : period(P), n_nodes(N) {
  if (!(P > 0.0)) throw DomainError("grid: period must be positive");
  if (N < 8 || N % 2 != 0) throw ShapeError("grid: N must be even and at least 8");
}

std::vector<double> cosine_analysis(const PeriodicGrid& g,
                                    const std::vector<double>& values) {
  const int M = g.modes();
  if (static_cast<int>(values.size()) != M + 1) {
    throw ShapeError("cosine_analysis: expected N/2+1 nodal values");
  }
  Dct1 dct(values.size());
  std::vector<double> z;
  dct.apply(values, z);
  std::vector<double> a(M + 1);
  a[0] = z[0] / (2.0 * M);
  for (int k = 1; k < M; ++k) a[k] = z[k] / M;
  a[M] = z[M] / (2.0 * M);
  return a;
}

std::vector<double> cosine_synthesis(const PeriodicGrid& g,
                                     const std::vector<double>& coeffs) {
  const int M = g.modes();
  if (static_cast<int>(coeffs.size()) != M + 1) {
    throw ShapeError("cosine_synthesis: expected N/2+1 coefficients");
  }
  std::vector<double> x(coeffs);
  for (int k = 1; k < M; ++k) x[k] *= 0.5;
  Dct1 dct(x.size());
  std::vector<double> u;
  dct.apply(x, u);
  return u;
}

EvenPeriodicFunction EvenPeriodicFunction::from_coeffs(const PeriodicGrid& g,
                                                       std::vector<double> coeffs) {
  EvenPeriodicFunction f;
  f.grid = g;
  f.values = cosine_synthesis(g, coeffs);
  f.coeffs = std::move(coeffs);
  return f;
}

EvenPeriodicFunction EvenPeriodicFunction::from_values(const PeriodicGrid& g,
                                                       std::vector<double> values) {
  EvenPeriodicFunction f;
  f.grid = g;
  f.coeffs = cosine_analysis(g, values);
  f.values = std::move(values);
  return f;
}

double EvenPeriodicFunction::operator()(double x) const {
  return eval_cosine_series(coeffs, grid.period, x);
}

double EvenPeriodicFunction::cache_defect() const {
  const auto recon = cosine_synthesis(grid, coeffs);
  double worst = 0.0, scale = 1.0;
  for (std::size_t i = 0; i < recon.size(); ++i) {
    worst = std::max(worst, std::fabs(recon[i] - values[i]));
    scale = std::max(scale, std::fabs(values[i]));
  }
  return worst / scale;
}

double eval_cosine_series(const std::vector<double>& coeffs, double period, double x) {
  const double c = std::cos(kTwoPi * x / period);
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    const double b0 = coeffs[k] + 2.0 * c * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs[0] + c * b1 - b2;
}

std::vector<double> product_coeffs(const std::vector<double>& a,
                                   const std::vector<double>& b) {
  if (a.size() != b.size()) throw ShapeError("product: length mismatch");
  const int M = static_cast<int>(a.size()) - 1;
  const int Mf = (3 * M) / 2 + 1;  // > 3M/2, so quadratic aliases land above M
  std::vector<double> ap(Mf + 1, 0.0), bp(Mf + 1, 0.0);
  for (int k = 0; k <= M; ++k) {
    ap[k] = a[k];
    bp[k] = b[k];
  }
  for (int k = 1; k < Mf; ++k) {
    ap[k] *= 0.5;
    bp[k] *= 0.5;
  }
  Dct1 dct(Mf + 1);
  std::vector<double> ua, ub;
  dct.apply(ap, ua);
  dct.apply(bp, ub);
  for (int i = 0; i <= Mf; ++i) ua[i] *= ub[i];
  std::vector<double> z;
  dct.apply(ua, z);
  std::vector<double> c(M + 1);
  c[0] = z[0] / (2.0 * Mf);
  for (int k = 1; k <= M; ++k) c[k] = z[k] / Mf;
  return c;
}

std::vector<std::vector<double>> product_matrix(const std::vector<double>& a) {
  const int M = static_cast<int>(a.size()) - 1;
  auto at = [&](int i) { return (i >= 0 && i <= M) ? a[i] : 0.0; };
  std::vector<std::vector<double>> C(M + 1, std::vector<double>(M + 1, 0.0));
  for (int k = 0; k <= M; ++k) C[0][k] = 0.5 * a[k];
  C[0][0] += 0.5 * a[0];
  for (int m = 1; m <= M; ++m) {
    for (int k = 0; k <= M; ++k) {
      C[m][k] = 0.5 * (at(m - k) + at(k - m) + at(m + k));
    }
  }
  return C;
}

}  // namespace whitham
