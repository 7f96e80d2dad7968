#include "quadfact/rootfind.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace quadfact {

double bisect(const BracketedRootQuery& q) {
  if (!(q.lo < q.hi)) throw std::invalid_argument("bisect: need lo < hi");
  if (!(q.tol > 0.0)) throw std::invalid_argument("bisect: tol must be > 0");
  double lo = q.lo;
  double hi = q.hi;
  double flo = q.h(lo);
  const double fhi = q.h(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw std::invalid_argument("bisect: no sign change on the bracket");
  }
  while (hi - lo > q.tol) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const double fm = q.h(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double tan_fixed_point(int n) {
  if (n < 0) throw std::invalid_argument("tan_fixed_point: n must be >= 0");
  if (n == 0) return 0.0;
  using std::numbers::pi;
  // x cos x - sin x has the same roots as tan x - x but no pole.
  auto g = [](double x) { return x * std::cos(x) - std::sin(x); };
  double lo = n * pi;
  double hi = (n + 0.5) * pi;
  const bool g_lo_negative = std::signbit(g(lo));
  for (int it = 0; it < 30; ++it) {
    const double mid = 0.5 * (lo + hi);
    (std::signbit(g(mid)) == g_lo_negative ? lo : hi) = mid;
  }
  // Safeguarded Newton, g'(x) = -x sin x.
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 60; ++it) {
    const double gx = g(x);
    if (gx == 0.0) break;
    (std::signbit(gx) == g_lo_negative ? lo : hi) = x;
    double next = x - gx / (-x * std::sin(x));
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == x) break;
    x = next;
  }
  // The last ulps: keep whichever neighbour has the smallest tan residual.
  auto residual = [](double t) { return std::abs(std::tan(t) - t); };
  for (int step = 0; step < 8; ++step) {
    const double up = std::nextafter(x, hi + 1.0);
    const double down = std::nextafter(x, lo - 1.0);
    if (residual(up) < residual(x)) {
      x = up;
    } else if (residual(down) < residual(x)) {
      x = down;
    } else {
      break;
    }
  }
  return x;
}

namespace {

double scan_for_root(const RealFunction& h, double step, double limit, double tol,
                     double direction) {
  if (!(step > 0.0) || !(limit > 0.0) || !(tol > 0.0)) {
    throw std::invalid_argument("rho: step, limit and tol must be > 0");
  }
  double prev_t = 0.0;
  double prev_h = std::numeric_limits<double>::quiet_NaN();
  for (long k = 1;; ++k) {
    const double t = std::min(double(k) * step, limit);
    const double ht = h(direction * t);
    if (ht == 0.0) return direction * t;
    if (k > 1 && std::signbit(ht) != std::signbit(prev_h)) {
      auto oriented = [&h, direction](double s) { return h(direction * s); };
      return direction * bisect({oriented, prev_t, t, tol});
    }
    if (t >= limit) break;
    prev_t = t;
    prev_h = ht;
  }
  return direction * std::numeric_limits<double>::infinity();
}

}  // namespace

double rho_plus(const RealFunction& h, double scan_step, double scan_limit, double tol) {
  return scan_for_root(h, scan_step, scan_limit, tol, 1.0);
}

double rho_minus(const RealFunction& h, double scan_step, double scan_limit, double tol) {
  return scan_for_root(h, scan_step, scan_limit, tol, -1.0);
}

MeanValuePoint find_mean_value_point(const CharacteristicSpec& spec, const SmoothFunction& f,
                                     double a, double x) {
  MeanValuePoint out;
  if (f.max_order() < spec.order()) {
    throw OrderError(f.label() + ": mean value form needs " + std::to_string(spec.order()) +
                     " derivatives");
  }
  if (x == a) {
    out.xi = a;
    return out;
  }
  const ExpPolynomial omega = characteristic_solution(spec);
  const double s = x - a;
  const double len = std::abs(s);
  auto omega_re = [&omega](double t) { return omega(t).real(); };
  const double first_root = s > 0 ? rho_plus(omega_re, len / 1024.0, len, len * 1e-15)
                                  : rho_minus(omega_re, len / 1024.0, len, len * 1e-15);
  if (std::abs(first_root) < len * (1.0 - 1e-12)) {
    throw std::domain_error(
        "find_mean_value_point: x - a lies beyond the first root of the characteristic "
        "solution");
  }

  out.weight_integral = omega.antiderivative()(s).real();
  out.remainder = f(x) - taylor_polynomial_part(spec, f, a, x);
  const double W = out.weight_integral;
  const double R = out.remainder;
  const double accept = 1e-10 * (1.0 + std::abs(R));
  auto phi = [&](double xi) { return apply_dc(spec, f, xi) * W - R; };

  const double lo = std::min(a, x);
  const double hi = std::max(a, x);
  if (W == 0.0) {
    if (std::abs(R) > accept) {
      throw NumericalError("find_mean_value_point: degenerate weight integral with R != 0");
    }
    out.xi = 0.5 * (a + x);
    out.residual = std::abs(R);
    return out;
  }

  constexpr int kGrid = 1024;
  std::vector<double> ts(kGrid + 1);
  std::vector<double> vs(kGrid + 1);
  double max_abs = 0.0;
  for (int i = 0; i <= kGrid; ++i) {
    ts[i] = i == kGrid ? hi : lo + (hi - lo) * i / kGrid;
    vs[i] = phi(ts[i]);
    max_abs = std::max(max_abs, std::abs(vs[i]));
  }
  if (max_abs <= accept) {
    out.xi = 0.5 * (a + x);
    out.residual = std::abs(phi(out.xi));
    return out;
  }
  for (int i = 1; i <= kGrid; ++i) {
    const bool interior_zero = vs[i] == 0.0 && i < kGrid;
    if (interior_zero || std::signbit(vs[i]) != std::signbit(vs[i - 1])) {
      const double xi = interior_zero ? ts[i]
                                      : bisect({phi, ts[i - 1], ts[i],
                                                4.0 * std::numeric_limits<double>::epsilon() *
                                                    std::max(std::abs(lo), std::abs(hi))});
      const double res = std::abs(phi(xi));
      if (res <= accept && xi > lo && xi < hi) {
        out.xi = xi;
        out.residual = res;
        return out;
      }
    }
  }
  throw NumericalError("find_mean_value_point: no point meets the residual bound");
}

namespace {

// sum_{k>=1} sign^{k+1} coef(k) t^{2k+1}, for |t| < 1.
template <class Coef>
double odd_series(double t, bool alternating, Coef coef) {
  double sum = 0.0;
  double power = t;
  for (int k = 1; k < 40; ++k) {
    power *= t * t;
    const double term = coef(k) * power;
    sum += (alternating && k % 2 == 0) ? -term : term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double inv_factorial(int m) {
  double r = 1.0;
  for (int i = 2; i <= m; ++i) r /= i;
  return r;
}

}  // namespace

double sinh_margin(double t) {
  if (t < 1.0) {
    const double num = odd_series(t, false, [](int k) { return inv_factorial(2 * k + 1); });
    return num / std::sinh(t);  // (sinh t - t) / sinh t
  }
  return 1.0 - t / std::sinh(t);
}

double coth_margin(double t) {
  if (t < 1.0) {
    const double num =
        odd_series(t, false, [](int k) { return 2.0 * k * inv_factorial(2 * k + 1); });
    return num / std::sinh(t);  // (t cosh t - sinh t) / sinh t
  }
  return t / std::tanh(t) - 1.0;
}

double cot_margin(double t) {
  if (t < 1.0) {
    const double num =
        odd_series(t, true, [](int k) { return 2.0 * k * inv_factorial(2 * k + 1); });
    return num / std::sin(t);  // (sin t - t cos t) / sin t
  }
  return 1.0 - t / std::tan(t);
}

double sin_margin(double t) {
  if (t < 1.0) {
    const double num = odd_series(t, true, [](int k) { return inv_factorial(2 * k + 1); });
    return num / std::sin(t);  // (t - sin t) / sin t
  }
  return t / std::sin(t) - 1.0;
}

}  // namespace quadfact
