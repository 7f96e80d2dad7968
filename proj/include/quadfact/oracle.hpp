#pragma once

// Adaptive Gauss-Kronrod integration. Every closed-form integral in the
// library is checked against this routine, so it deliberately shares no code
// with the exponential-polynomial calculus.

#include <cstddef>
#include <span>

#include "quadfact/common.hpp"

namespace quadfact {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // sum of |K15 - G7| over the final panels
  std::size_t subdivisions = 0;
};

/// Integrates `h` over [a, b] (a > b yields the negated integral).
///
/// Panels never straddle a breakpoint. Refinement stops once the summed
/// panel error is at most `tol * (floor + |value|)`; `floor = 1` gives the
/// mixed absolute/relative criterion, `floor = 0` a purely relative one.
/// Throws NumericalError beyond 2^20 panels or when the tolerance is below
/// what floating point can resolve.
QuadratureResult integrate_adaptive(const RealFunction& h, double a, double b,
                                    double tol,
                                    std::span<const double> breakpoints = {},
                                    double floor = 1.0);

}  // namespace quadfact
