#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quadfact/kernels.hpp"
#include "quadfact/rootfind.hpp"

namespace quadfact {

namespace {

// Below this |u| the weights and constants come from power series in u;
// the closed forms lose digits to cancellation as u -> 0.
constexpr double kSeriesRadius = 1.5;
// Up to this |u| the kernel is summed as a real power series in long double;
// beyond it g_u comes from the real form of h_u.
constexpr double kKernelSeriesRadius = 4.0;

double inv_factorial(int m) {
  double r = 1.0;
  for (int i = 2; i <= m; ++i) r /= i;
  return r;
}

// q_n = (u^{2n} - conj(u)^{2n}) / (u^2 - conj(u)^2) = |u|^{2n-2} U_{n-1}(cos 2 theta)
// for n = 1..count (index 0 unused).
std::vector<double> chebyshev_ratios(double w, double v, int count) {
  const double r2 = w * w + v * v;
  const double x = (w * w - v * v) / r2;
  std::vector<double> q(count + 1, 0.0);
  double u_prev = 0.0;  // U_{-1}
  double u_cur = 1.0;   // U_0
  double power = 1.0;   // r2^{n-1}
  for (int n = 1; n <= count; ++n) {
    q[n] = power * u_cur;
    const double u_next = 2.0 * x * u_cur - u_prev;
    u_prev = u_cur;
    u_cur = u_next;
    power *= r2;
  }
  return q;
}

constexpr int kSeriesTerms = 30;

struct SeriesParts {
  double A;      // sum q_n / (2n+1)!
  double B;      // sum q_n / (2n)!
  double delta;  // alpha - 1/6
};

SeriesParts weight_series(double w, double v) {
  const std::vector<double> q = chebyshev_ratios(w, v, kSeriesTerms);
  SeriesParts s{0.0, 0.0, 0.0};
  double delta_num = 0.0;
  for (int n = 1; n <= kSeriesTerms; ++n) {
    s.A += q[n] * inv_factorial(2 * n + 1);
    s.B += q[n] * inv_factorial(2 * n);
    delta_num += q[n] * (2.0 - 2.0 * n) / 3.0 * inv_factorial(2 * n + 1);
  }
  s.delta = delta_num / (2.0 * s.B);
  return s;
}

}  // namespace

SimpsonParam::SimpsonParam(double w, double v) : w_(w), v_(v) {
  if (!(w > 0.0) || !std::isfinite(w)) throw std::domain_error("SimpsonParam: need w > 0");
  if (!(v > 0.0 && v < std::numbers::pi)) {
    throw std::domain_error("SimpsonParam: need 0 < v < pi");
  }
}

SimpsonWeights simpson_alpha_beta(const SimpsonParam& p) {
  const double w = p.w();
  const double v = p.v();
  double alpha;
  if (std::abs(p.u()) < kSeriesRadius) {
    const SeriesParts s = weight_series(w, v);
    alpha = s.A / (2.0 * s.B);
  } else {
    alpha = (w * std::sin(v) / std::tanh(w) - v * std::cos(v)) / (2.0 * p.abs2() * std::sin(v));
  }
  const cplx u = p.u();
  const cplx sinhc_u = std::sinh(u) / u;
  const cplx beta_c = sinhc_u - 2.0 * alpha * std::cosh(u);
  const double bound =
      1e-12 * std::max({1.0, std::abs(beta_c.real()), std::abs(sinhc_u)});
  if (std::abs(beta_c.imag()) > bound) {
    throw NumericalError("simpson_alpha_beta: beta has a non-negligible imaginary part");
  }
  return {alpha, beta_c.real()};
}

double simpson_excess(const SimpsonParam& p) {
  const double w = p.w();
  const double v = p.v();
  if (std::abs(p.u()) < kSeriesRadius) {
    // sinh(u)/u - 1 - 2 alpha (cosh u - 1); the u^2 terms combine into -u^2 delta.
    const SeriesParts s = weight_series(w, v);
    const double alpha = s.A / (2.0 * s.B);
    const cplx u2 = p.u() * p.u();
    cplx sum = -u2 * s.delta;
    cplx power = u2;
    for (int n = 2; n <= kSeriesTerms; ++n) {
      power *= u2;
      sum += power * (inv_factorial(2 * n + 1) - 2.0 * alpha * inv_factorial(2 * n));
    }
    return sum.real();
  }
  // (v sinh w + w sin v)(cosh w - cos v) / ((v^2 + w^2) sinh w sin v) - 1
  return (v + w * std::sin(v) / std::sinh(w)) * (std::cosh(w) - std::cos(v)) /
             (p.abs2() * std::sin(v)) -
         1.0;
}

Measure simpson_u_measure(double a, double b, const SimpsonParam& u) {
  const SimpsonWeights wts = simpson_alpha_beta(u);
  return simpson_measure(a, b, wts.alpha, wts.beta);
}

CharacteristicSpec simpson_spec(double a, double b, const SimpsonParam& u) {
  const cplx l = u.lambda(a, b);
  return CharacteristicSpec({{l, 1}, {-l, 1}, {std::conj(l), 1}, {-std::conj(l), 1}});
}

SimpsonOperator simpson_operator(double a, double b, const SimpsonParam& u) {
  const double h = b - a;
  const double w2 = u.w() * u.w();
  const double v2 = u.v() * u.v();
  return {8.0 * (v2 - w2) / (h * h), 16.0 * (w2 + v2) * (w2 + v2) / (h * h * h * h)};
}

double simpson_kernel_peak(double a, double b, const SimpsonParam& p) {
  const double w = p.w();
  const double v = p.v();
  const double r2 = p.abs2();
  // (sinh(w)/w - sin(v)/v) / (w^2 + v^2)
  double ratio;
  if (std::abs(p.u()) < kSeriesRadius) {
    ratio = 1.0 / 6.0;
    double w_pow = w * w;
    double v_pow = v * v;
    for (int n = 2; n <= kSeriesTerms; ++n) {
      w_pow *= w * w;
      v_pow *= v * v;
      const double sign = (n % 2 == 0) ? -1.0 : 1.0;
      ratio += (w_pow + sign * v_pow) / r2 * inv_factorial(2 * n + 1);
    }
  } else {
    ratio = (std::sinh(w) / w - std::sin(v) / v) / r2;
  }
  const double h = b - a;
  return h * h * h / 32.0 * ratio * ratio / ((std::sinh(w) / w) * (std::sin(v) / v));
}

double simpson_kernel_integral(double a, double b, const SimpsonParam& p) {
  const double h = b - a;
  const double r2 = p.abs2();
  return h * h * h * h * simpson_excess(p) / (16.0 * r2 * r2);
}

namespace {

struct OmegaPair {
  double omega_mid;  // w(m - t), or 0 when t > m
  double omega_end;  // w(b - t)
  double primitive_end;  // integral_0^{b-t} w
};

OmegaPair omega_series(double lam_w, double lam_v, double s_mid, double s_end) {
  using ld = long double;
  const ld r2 = ld(lam_w) * lam_w + ld(lam_v) * lam_v;
  const ld x = (ld(lam_w) * lam_w - ld(lam_v) * lam_v) / r2;
  ld u_prev = 0.0L;
  ld u_cur = 1.0L;
  ld power = 1.0L;
  // Running s^{2k+1}/(2k+1)! and s^{2k+2}/(2k+2)!, starting at k = 1.
  ld mid_term = ld(s_mid) * s_mid * s_mid / 6.0L;
  ld end_term = ld(s_end) * s_end * s_end / 6.0L;
  ld end_prim = ld(s_end) * s_end * s_end * s_end / 24.0L;
  ld om_mid = 0.0L;
  ld om_end = 0.0L;
  ld prim = 0.0L;
  for (int k = 1; k <= 200; ++k) {
    const ld q = power * u_cur;
    om_mid += q * mid_term;
    om_end += q * end_term;
    prim += q * end_prim;
    const ld size = std::fabs(power) * (k + 1) * (std::fabs(end_term) + std::fabs(mid_term));
    if (k > 4 && size <= 1e-21L * (std::fabs(om_end) + std::fabs(om_mid)) + 1e-300L) break;
    const ld u_next = 2.0L * x * u_cur - u_prev;
    u_prev = u_cur;
    u_cur = u_next;
    power *= r2;
    const ld a1 = 2 * k + 2;
    const ld a2 = 2 * k + 3;
    const ld a3 = 2 * k + 4;
    mid_term *= ld(s_mid) * s_mid / (a1 * a2);
    end_term *= ld(s_end) * s_end / (a1 * a2);
    end_prim *= ld(s_end) * s_end / (a2 * a3);
  }
  return {static_cast<double>(om_mid), static_cast<double>(om_end), static_cast<double>(prim)};
}

}  // namespace

double simpson_kernel(double a, double b, const SimpsonParam& p, double t) {
  if (!(a < b)) throw std::invalid_argument("simpson_kernel: need a < b");
  if (!(t >= a && t <= b)) throw std::domain_error("simpson_kernel: t outside [a, b]");
  const double m = 0.5 * (a + b);

  if (std::abs(p.u()) > kKernelSeriesRadius) {
    // Summing w and its primitive directly cancels terms of size e^{2w}
    // down to g; the real form of h_u keeps its dominant terms at the size
    // of the result. g is symmetric about m, so fold onto [m, b].
    const double folded = std::max(t, a + b - t);
    const double s = std::clamp((b - folded) / (b - m), 0.0, 1.0);
    const double h = b - a;
    const double r2 = p.abs2();
    const double denom = 128.0 * r2 * r2 * p.w() * p.v() * std::sinh(p.w()) * std::sin(p.v());
    return h * h * h * simpson_h(p, s) / denom;
  }

  const SimpsonWeights wts = simpson_alpha_beta(p);
  const bool with_mid = t <= m;
  const cplx lam = p.lambda(a, b);
  const OmegaPair o = omega_series(lam.real(), lam.imag(), with_mid ? m - t : 0.0, b - t);
  double g = wts.alpha * o.omega_end - o.primitive_end / (b - a);
  if (with_mid) g += wts.beta * o.omega_mid;
  return g;
}

double simpson_h(const SimpsonParam& p, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::domain_error("simpson_h: s outside [0, 1]");
  const double w = p.w();
  const double v = p.v();
  return 4.0 * w * w * std::cosh((1.0 - s) * w) * std::sin(v) * std::sin(s * v) +
         4.0 * v * v * std::cos((1.0 - s) * v) * std::sinh(s * w) * std::sinh(w) +
         4.0 * w * v * std::sin(v) * std::cos(s * v) * std::sinh((1.0 - s) * w) +
         4.0 * w * v * std::sinh(w) * std::cosh(s * w) * std::sin((1.0 - s) * v) -
         8.0 * w * v * std::sinh(w) * std::sin(v);
}

CotChainMargins cot_chain_margins(double w, double v, double s) {
  if (!(w > 0.0) || !(v > 0.0 && v < std::numbers::pi) || !(s > 0.0 && s < 1.0)) {
    throw std::domain_error("cot_chain_margins: need w > 0, 0 < v < pi, 0 < s < 1");
  }
  return {s * cot_margin(v) - cot_margin(s * v), s * coth_margin(w) - coth_margin(s * w)};
}

}  // namespace quadfact
