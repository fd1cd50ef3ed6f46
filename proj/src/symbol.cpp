#include "whitham/symbol.hpp"

#include <cmath>

#include "whitham/errors.hpp"

namespace whitham {

double WhithamSymbol::operator()(double xi) const {
  if (!std::isfinite(xi)) {
    throw DomainError("symbol: non-finite argument");
  }
  const double a = std::fabs(xi);
  if (a < cutoff_) {
    const double s = xi * xi;
    const auto c = taylor_coeffs();
    return c[0] + s * (c[1] + s * (c[2] + s * (c[3] + s * c[4])));
  }
  return std::sqrt(std::tanh(a) / a);
}

}  // namespace whitham
