#pragma once

#include <cstddef>
#include <vector>

namespace whitham {

/// Uniform collocation grid for one period, nodes x_j = -P/2 + j*P/N.
/// N is even, so the nodes are symmetric about 0 and x_{N/2} = 0. For even
/// functions the distinct values live at x = i*P/N, i = 0..N/2 (crest to
/// trough); everything below stores that half.
struct PeriodicGrid {
  double period = 0.0;
  int n_nodes = 0;

  PeriodicGrid() = default;
  PeriodicGrid(double P, int N);

  int modes() const { return n_nodes / 2; }           // highest cosine mode M
  double spacing() const { return period / n_nodes; }
  double half_node(int i) const { return i * period / n_nodes; }  // i = 0..M
  double full_node(int j) const { return -period / 2 + j * period / n_nodes; }

  bool operator==(const PeriodicGrid& o) const {
    return period == o.period && n_nodes == o.n_nodes;
  }
};

/// Even P-periodic function as a cosine series
///   f(x) = sum_{k=0}^{M} a_k cos(2*pi*k*x/P),   M = N/2,
/// with the nodal values on the half grid cached alongside the coefficients.
struct EvenPeriodicFunction {
  PeriodicGrid grid;
  std::vector<double> coeffs;   // a_0..a_M
  std::vector<double> values;   // f at x = i*P/N, i = 0..M

  static EvenPeriodicFunction from_coeffs(const PeriodicGrid& g,
                                          std::vector<double> coeffs);
  static EvenPeriodicFunction from_values(const PeriodicGrid& g,
                                          std::vector<double> values);

  /// Series evaluation at arbitrary x (Clenshaw).
  double operator()(double x) const;

  /// Max relative inconsistency between the cached values and the coefficients.
  double cache_defect() const;
};

/// Exact DCT-I pair between half-grid values and cosine coefficients.
std::vector<double> cosine_analysis(const PeriodicGrid& g,
                                    const std::vector<double>& values);
std::vector<double> cosine_synthesis(const PeriodicGrid& g,
                                     const std::vector<double>& coeffs);

/// Coefficients of the product f*g truncated to modes 0..M, computed on a
/// dealiased fine grid (3/2-rule size, rounded up so no quadratic alias
/// reaches the retained modes). Inputs are coefficient vectors of length M+1.
std::vector<double> product_coeffs(const std::vector<double>& a,
                                   const std::vector<double>& b);

/// Dense matrix of b -> product_coeffs(a, b); the exact Jacobian block of the
/// quadratic term. Entry (m, k) uses the Toeplitz+Hankel structure of the
/// cosine product.
std::vector<std::vector<double>> product_matrix(const std::vector<double>& a);

/// Clenshaw evaluation of sum a_k cos(2*pi*k*x/P) for a standalone vector.
double eval_cosine_series(const std::vector<double>& coeffs, double period, double x);

}  // namespace whitham
