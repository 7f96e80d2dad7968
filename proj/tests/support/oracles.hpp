#pragma once

// Test-side reference computations. None of these call into the library;
// they use plainer (slower, higher-precision) methods so that agreement is
// evidence rather than a tautology.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------------------
// Exact rationals over 128-bit integers, enough for the small polynomial
// functionals used in tests.

class Rational {
 public:
  Rational(__int128 num = 0, __int128 den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return {x.num_ * y.num_, x.den_ * y.den_};
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    return {x.num_ * y.den_, x.den_ * y.num_};
  }
  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

 private:
  static __int128 gcd(__int128 x, __int128 y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
      const __int128 r = x % y;
      x = y;
      y = r;
    }
    return x == 0 ? 1 : x;
  }
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const __int128 g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  __int128 num_;
  __int128 den_;
};

inline Rational rpow(Rational x, int m) {
  Rational r{1};
  for (int i = 0; i < m; ++i) r = r * x;
  return r;
}

/// Trapezoid remainder of x^m on [0, 1]: (0^m + 1)/2 - 1/(m+1).
inline Rational trapezoid_monomial(int m) {
  return (rpow(0, m) + Rational{1}) / Rational{2} - Rational{1, m + 1};
}

/// Classical Simpson remainder of x^m on [0, 1].
inline Rational simpson_monomial(int m) {
  return Rational{1, 6} * (rpow(0, m) + Rational{1}) + Rational{2, 3} * rpow({1, 2}, m) -
         Rational{1, m + 1};
}

// ---------------------------------------------------------------------------
// Classical RK4 on the first-order system of c_n y^(n) + ... + c_0 y = 0 with
// y^(i)(0) = delta_{i,n-1}, in long double.

inline long double rk4_characteristic(const std::vector<double>& c, long double t_end,
                                      int steps = 4000) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<long double> y(n, 0.0L);
  y[n - 1] = 1.0L;
  auto rhs = [&](const std::vector<long double>& s) {
    std::vector<long double> d(n);
    for (int i = 0; i + 1 < n; ++i) d[i] = s[i + 1];
    long double top = 0.0L;
    for (int i = 0; i < n; ++i) top -= c[i] * s[i];
    d[n - 1] = top / c[n];
    return d;
  };
  const long double h = t_end / steps;
  for (int k = 0; k < steps; ++k) {
    auto k1 = rhs(y);
    std::vector<long double> tmp(n);
    for (int i = 0; i < n; ++i) tmp[i] = y[i] + h / 2 * k1[i];
    auto k2 = rhs(tmp);
    for (int i = 0; i < n; ++i) tmp[i] = y[i] + h / 2 * k2[i];
    auto k3 = rhs(tmp);
    for (int i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
    auto k4 = rhs(tmp);
    for (int i = 0; i < n; ++i) y[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }
  return y[0];
}

// ---------------------------------------------------------------------------
// Fixed points of tan by plain long-double bisection on sin x - x cos x,
// which has no poles and changes sign once on (n pi, (n + 1/2) pi).

inline long double tau_bisection(int n) {
  if (n == 0) return 0.0L;
  const long double pi = std::numbers::pi_v<long double>;
  long double lo = n * pi;
  long double hi = (n + 0.5L) * pi;
  auto g = [](long double x) { return std::sin(x) - x * std::cos(x); };
  const bool lo_negative = g(lo) < 0;
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if ((g(mid) < 0) == lo_negative) lo = mid; else hi = mid;
  }
  return 0.5L * (lo + hi);
}

// ---------------------------------------------------------------------------
// Simpson-type weights by solving 2 alpha cosh u + beta = sinh(u)/u directly
// (real and imaginary parts give two linear equations). Loses ~|u|^-2
// relative accuracy as u -> 0, so use for |u| >~ 0.05.

struct Weights {
  long double alpha;
  long double beta;
};

inline Weights simpson_weights(double w, double v) {
  const std::complex<long double> u{w, v};
  const std::complex<long double> ch = std::cosh(u);
  const std::complex<long double> target = std::sinh(u) / u;
  const long double alpha = target.imag() / (2.0L * ch.imag());
  return {alpha, target.real() - 2.0L * alpha * ch.real()};
}

// ---------------------------------------------------------------------------
// Composite Gauss-Legendre quadrature with nodes from Newton iteration on
// the Legendre recurrence. No adaptivity, no error estimate.

class GaussLegendre {
 public:
  explicit GaussLegendre(int order = 12) {
    const int n = order;
    for (int i = 1; i <= n; ++i) {
      long double x = std::cos(std::numbers::pi_v<long double> * (i - 0.25L) / (n + 0.5L));
      long double dp = 0.0L;
      for (int it = 0; it < 100; ++it) {
        long double p0 = 1.0L;
        long double p1 = x;
        for (int k = 2; k <= n; ++k) {
          const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0L);
        const long double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-19L) break;
      }
      nodes_.push_back(static_cast<double>(x));
      weights_.push_back(static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp)));
    }
  }

  /// Integrates over [a, b] split at the sorted `cuts`, each piece divided
  /// into `panels` equal panels.
  double integrate(const std::function<double(double)>& h, double a, double b, int panels,
                   std::vector<double> cuts = {}) const {
    cuts.push_back(a);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    long double total = 0.0L;
    for (std::size_t piece = 0; piece + 1 < cuts.size(); ++piece) {
      const double lo = cuts[piece];
      const double hi = cuts[piece + 1];
      if (!(lo < hi) || lo < a || hi > b) continue;
      const double width = (hi - lo) / panels;
      for (int p = 0; p < panels; ++p) {
        const double pl = lo + p * width;
        const double half = 0.5 * width;
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
          total += static_cast<long double>(weights_[i]) * half * h(pl + half + half * nodes_[i]);
        }
      }
    }
    return static_cast<double>(total);
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Maximum of |h| on a dense grid, refined by a parabola through the best
/// sample and its neighbours.
inline double dense_sup(const std::function<double(double)>& h, double a, double b,
                        int n = 200000) {
  double best = 0.0;
  int best_i = 0;
  std::vector<double> vals(n + 1);
  for (int i = 0; i <= n; ++i) {
    vals[i] = std::abs(h(a + (b - a) * i / n));
    if (vals[i] > best) {
      best = vals[i];
      best_i = i;
    }
  }
  if (best_i > 0 && best_i < n) {
    const double y0 = vals[best_i - 1];
    const double y1 = vals[best_i];
    const double y2 = vals[best_i + 1];
    const double denom = y0 - 2 * y1 + y2;
    if (denom < 0) best = std::max(best, y1 - 0.125 * (y2 - y0) * (y2 - y0) / denom);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Deterministic generators.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

inline bool close_rel(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace oracle
