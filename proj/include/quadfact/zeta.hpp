#pragma once

#include "quadfact/charode.hpp"
#include "quadfact/smooth_function.hpp"

namespace quadfact {

/// zeta_{n,k,gamma}(t) = sum_{i>=0} gamma^i t^{i(n-k)+n} / (i(n-k)+n)!
struct ZetaParams {
  int n = 1;
  int k = 0;
  double gamma = 0.0;

  /// Throws std::invalid_argument unless n >= 1 and 0 <= k < n.
  void validate() const;
};

/// sum_{i>=0} gamma^i t^{i d + e} / (i d + e)!, summed by term ratios.
/// Throws NumericalError if the series does not settle within 500 terms or
/// overflows.
double zeta_series(int d, int e, double gamma, double t);

double zeta(const ZetaParams& p, double t);
/// j-th derivative, 0 <= j <= n. Throws OrderError for j > n.
double zeta_derivative(const ZetaParams& p, int order, double t);

/// Expansion with the polynomial part
///   sum_{j<k} f^{(j)}(a) (x-a)^j / j! + sum_{j=k}^{n-1} f^{(j)}(a) zeta^{(n-j)}(x-a)
/// and the remainder integral_a^x (f^{(n)} - gamma f^{(k)})(t) zeta'(x-t) dt.
TaylorSplit zeta_taylor_expansion(const ZetaParams& p, const SmoothFunction& f, double a,
                                  double x, double tol = 1e-12);

}  // namespace quadfact
