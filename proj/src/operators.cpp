#include "whitham/operators.hpp"

#include <cmath>

#include "whitham/errors.hpp"

namespace whitham {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

std::vector<double> multiplier_table(const PeriodicGrid& g, const WhithamSymbol& m) {
  std::vector<double> mk(g.modes() + 1);
  for (int k = 0; k <= g.modes(); ++k) mk[k] = m(kTwoPi * k / g.period);
  return mk;
}

EvenPeriodicFunction apply_L(const EvenPeriodicFunction& f, const WhithamSymbol& m) {
  const auto mk = multiplier_table(f.grid, m);
  std::vector<double> b(f.coeffs.size());
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = mk[k] * f.coeffs[k];
  return EvenPeriodicFunction::from_coeffs(f.grid, std::move(b));
}

EvenPeriodicFunction steady_residual(const EvenPeriodicFunction& f, double mu,
                                     const WhithamSymbol& m) {
  const auto mk = multiplier_table(f.grid, m);
  auto r = product_coeffs(f.coeffs, f.coeffs);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += (mk[k] - mu) * f.coeffs[k];
  return EvenPeriodicFunction::from_coeffs(f.grid, std::move(r));
}

EvenPeriodicFunction jacobian_action(const EvenPeriodicFunction& f, double mu,
                                     const EvenPeriodicFunction& df, double dmu,
                                     const WhithamSymbol& m) {
  if (!(f.grid == df.grid)) throw ShapeError("jacobian_action: grid mismatch");
  const auto mk = multiplier_table(f.grid, m);
  auto r = product_coeffs(f.coeffs, df.coeffs);
  for (std::size_t k = 0; k < r.size(); ++k) {
    r[k] = 2.0 * r[k] + (mk[k] - mu) * df.coeffs[k] - dmu * f.coeffs[k];
  }
  return EvenPeriodicFunction::from_coeffs(f.grid, std::move(r));
}

}  // namespace whitham
