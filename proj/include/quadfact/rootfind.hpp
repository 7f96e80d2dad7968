#pragma once

#include "quadfact/charode.hpp"
#include "quadfact/common.hpp"
#include "quadfact/smooth_function.hpp"

namespace quadfact {

/// A continuous function with a sign change on [lo, hi].
struct BracketedRootQuery {
  RealFunction h;
  double lo;
  double hi;
  double tol;  // bracket width at which bisection stops
};

/// Bisection; returns the midpoint of the final bracket, or an endpoint
/// where h vanishes exactly. Throws std::invalid_argument without a sign
/// change or with lo >= hi or tol <= 0.
double bisect(const BracketedRootQuery& q);

/// The unique solution of tan x = x in ((n - 1/2) pi, (n + 1/2) pi).
double tan_fixed_point(int n);

/// First positive root of h: scans t = step, 2 step, ... up to limit for an
/// exact zero or a sign change and bisects the bracket to width tol.
/// Returns +infinity when nothing is found.
double rho_plus(const RealFunction& h, double scan_step, double scan_limit, double tol);
/// Mirror of rho_plus on the negative axis; -infinity when nothing is found.
double rho_minus(const RealFunction& h, double scan_step, double scan_limit, double tol);

struct MeanValuePoint {
  double xi = 0.0;
  double remainder = 0.0;        // R = f(x) - Taylor polynomial part
  double weight_integral = 0.0;  // W = integral_0^{x-a} w(t) dt
  double residual = 0.0;         // |(D f)(xi) W - R|
};

/// Leftmost xi between a and x with f(x) - polynomial part = (D f)(xi) W.
/// Throws std::domain_error when x - a lies outside [rho-(w), rho+(w)] and
/// NumericalError when W = 0 but R != 0 or no point meets the residual
/// bound 1e-10 (1 + |R|). Returns the midpoint when R and D f both vanish.
MeanValuePoint find_mean_value_point(const CharacteristicSpec& spec, const SmoothFunction& f,
                                     double a, double x);

// Margins of the hyperbolic and trigonometric inequalities
//   t / sinh t < 1 < t coth t   (t > 0),
//   t cot t < 1 < t / sin t     (0 < t < pi).
// Each returns the positive gap, evaluated without cancellation for small t.
double sinh_margin(double t);  // 1 - t / sinh t
double coth_margin(double t);  // t coth t - 1
double cot_margin(double t);   // 1 - t cot t
double sin_margin(double t);   // t / sin t - 1

}  // namespace quadfact
