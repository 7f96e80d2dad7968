#include "quadfact/zeta.hpp"

#include <cmath>
#include <stdexcept>

#include "quadfact/oracle.hpp"

namespace quadfact {

void ZetaParams::validate() const {
  if (n < 1) throw std::invalid_argument("ZetaParams: n must be >= 1");
  if (k < 0 || k >= n) throw std::invalid_argument("ZetaParams: need 0 <= k < n");
  if (!std::isfinite(gamma)) throw std::invalid_argument("ZetaParams: gamma not finite");
}

double zeta_series(int d, int e, double gamma, double t) {
  if (d < 1 || e < 0) throw std::invalid_argument("zeta_series: need d >= 1, e >= 0");
  double term = 1.0;  // t^e / e!
  for (int r = 1; r <= e; ++r) term *= t / r;
  double sum = term;
  const double td = std::pow(t, d);
  constexpr int kMaxTerms = 500;
  for (int i = 0; i < kMaxTerms; ++i) {
    // term_{i+1} / term_i = gamma t^d / ((id+e+1) ... (id+e+d))
    double denom = 1.0;
    for (int r = 1; r <= d; ++r) denom *= double(i) * d + e + r;
    const double ratio = gamma * td / denom;
    // Ratios only shrink from here on, so the tail is below twice the term.
    if (std::abs(term) <= 1e-17 * std::abs(sum) && std::abs(ratio) < 0.5) {
      return sum;
    }
    term *= ratio;
    sum += term;
    if (!std::isfinite(sum)) throw NumericalError("zeta_series: overflow");
  }
  throw NumericalError("zeta_series: no convergence within 500 terms");
}

double zeta(const ZetaParams& p, double t) {
  p.validate();
  return zeta_series(p.n - p.k, p.n, p.gamma, t);
}

double zeta_derivative(const ZetaParams& p, int order, double t) {
  p.validate();
  if (order < 0) throw std::invalid_argument("zeta_derivative: negative order");
  if (order > p.n) {
    throw OrderError("zeta_derivative: order " + std::to_string(order) + " exceeds n = " +
                     std::to_string(p.n));
  }
  // Differentiating term-wise lowers every exponent by one; the i = 0
  // exponent n - order stays nonnegative, so no term drops out early.
  return zeta_series(p.n - p.k, p.n - order, p.gamma, t);
}

TaylorSplit zeta_taylor_expansion(const ZetaParams& p, const SmoothFunction& f, double a,
                                  double x, double tol) {
  p.validate();
  if (f.max_order() < p.n) {
    throw OrderError(f.label() + ": expansion needs " + std::to_string(p.n) + " derivatives");
  }
  const double s = x - a;
  TaylorSplit out;
  double power = 1.0;  // s^j / j!
  for (int j = 0; j < p.k; ++j) {
    out.polynomial_part += f.derivative(j, a) * power;
    power *= s / (j + 1);
  }
  for (int j = p.k; j < p.n; ++j) {
    out.polynomial_part += f.derivative(j, a) * zeta_derivative(p, p.n - j, s);
  }
  auto integrand = [&](double t) {
    return (f.derivative(p.n, t) - p.gamma * f.derivative(p.k, t)) *
           zeta_derivative(p, 1, x - t);
  };
  out.remainder_integral = integrate_adaptive(integrand, a, x, tol).value;
  return out;
}

}  // namespace quadfact
