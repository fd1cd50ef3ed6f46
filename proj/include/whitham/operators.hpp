#pragma once

#include <vector>

#include "whitham/grid.hpp"
#include "whitham/symbol.hpp"

namespace whitham {

/// Multiplier values m(2*pi*k/P) for k = 0..M on a given grid.
std::vector<double> multiplier_table(const PeriodicGrid& g, const WhithamSymbol& m);

/// L f: mode k scaled by m(2*pi*k/P). Equals convolution with the periodized
/// kernel.
EvenPeriodicFunction apply_L(const EvenPeriodicFunction& f, const WhithamSymbol& m);

/// Residual of the steady equation, -mu*f + L f + f^2, with the quadratic
/// term formed on the dealiased fine grid.
EvenPeriodicFunction steady_residual(const EvenPeriodicFunction& f, double mu,
                                     const WhithamSymbol& m);

/// Exact Frechet derivative action of steady_residual:
///   (L - mu) df + 2*P(f*df) - dmu*f,
/// where P(f*df) is the same dealiased product used by the residual.
EvenPeriodicFunction jacobian_action(const EvenPeriodicFunction& f, double mu,
                                     const EvenPeriodicFunction& df, double dmu,
                                     const WhithamSymbol& m);

}  // namespace whitham
