#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "quadfact/kernels.hpp"
#include "quadfact/rootfind.hpp"

using namespace quadfact;

namespace {

constexpr double kPi = std::numbers::pi;

SimpsonParam random_u(oracle::Rng& rng, double w_max = 6.0) {
  return {rng.uniform(0.02, w_max), rng.uniform(0.02, kPi - 0.02)};
}

// Peak value in the product form, long double.
double peak_by_hand(double a, double b, double w, double v) {
  using ld = long double;
  const ld lw = w;
  const ld lv = v;
  const ld num = lv * std::sinh(lw) - lw * std::sin(lv);
  const ld h = b - a;
  return static_cast<double>(h * h * h * num * num /
                             (32 * (lw * lw + lv * lv) * (lw * lw + lv * lv) * lw * lv * std::sinh(lw) * std::sin(lv)));
}

}  // namespace

TEST_CASE("admissible parameters") {
  CHECK_THROWS_AS(SimpsonParam(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(SimpsonParam(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(SimpsonParam(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(SimpsonParam(1.0, kPi), std::domain_error);
  CHECK(SimpsonParam(1.0, 2.0).lambda(0.0, 4.0) == cplx(0.5, 1.0));
}

TEST_CASE("weights tend to the classical Simpson weights") {
  const SimpsonWeights wts = simpson_alpha_beta(SimpsonParam(1e-4, 1e-4));
  CHECK(std::abs(wts.alpha - 1.0 / 6.0) <= 1e-7);
  CHECK(std::abs(wts.beta - 2.0 / 3.0) <= 1e-7);
}

TEST_CASE("weights solve the spectral equation") {
  oracle::Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const SimpsonParam u = random_u(rng);
    const SimpsonWeights wts = simpson_alpha_beta(u);
    const std::complex<long double> lu{u.w(), u.v()};
    const std::complex<long double> resid = 2.0L * wts.alpha * std::cosh(lu) + static_cast<long double>(wts.beta) - std::sinh(lu) / lu;
    const long double scale = std::abs(std::sinh(lu) / lu) + std::abs(2.0L * wts.alpha * std::cosh(lu));
    CHECK(static_cast<double>(std::abs(resid)) <= 1e-12 * std::max(1.0L, scale));
    if (std::abs(u.u()) > 0.1) {
      const oracle::Weights ref = oracle::simpson_weights(u.w(), u.v());
      CHECK(oracle::close_rel(wts.alpha, static_cast<double>(ref.alpha), 1e-12));
      CHECK(oracle::close_rel(wts.beta, static_cast<double>(ref.beta), 1e-11));
    }
  }
}

TEST_CASE("both sides of the series boundary agree with the direct solve") {
  for (double theta : {0.2, 0.7, 1.2}) {
    for (double r : {1.5 * (1 - 1e-12), 1.5 * (1 + 1e-12)}) {
      const SimpsonParam u(r * std::cos(theta), r * std::sin(theta));
      const SimpsonWeights wts = simpson_alpha_beta(u);
      const oracle::Weights ref = oracle::simpson_weights(u.w(), u.v());
      CHECK(oracle::close_rel(wts.alpha, static_cast<double>(ref.alpha), 1e-14));
      CHECK(oracle::close_rel(wts.beta, static_cast<double>(ref.beta), 1e-14));
      CHECK(oracle::close_rel(simpson_excess(u), static_cast<double>(2 * ref.alpha + ref.beta - 1), 1e-12));
    }
  }
}

TEST_CASE("excess 2 alpha + beta - 1") {
  oracle::Rng rng(73);
  for (int trial = 0; trial < 30; ++trial) {
    const SimpsonParam u = random_u(rng);
    const oracle::Weights ref = oracle::simpson_weights(u.w(), u.v());
    const double expected = static_cast<double>(2 * ref.alpha + ref.beta - 1);
    if (std::abs(u.u()) > 0.3) CHECK(oracle::close_rel(simpson_excess(u), expected, 1e-9 / std::abs(u.u() * u.u())));
    CHECK(simpson_excess(u) > 0.0);
  }
  // Near zero the excess is -|u|^4/360 times cos(4 theta)... its leading term
  // is (u^4 + conj(u)^4)/720 - 2 (1/6)(u^4 + conj(u)^4)/(2 * 24) ... just compare
  // against a long-double rescaled oracle instead: excess(t u) / t^4 converges.
  const double e1 = simpson_excess(SimpsonParam(2e-3, 1e-3)) / 1e-12;
  const double e2 = simpson_excess(SimpsonParam(1e-3, 5e-4)) / 6.25e-14;
  CHECK(std::abs(e1 - e2) <= 1e-5 * std::abs(e2));
}

TEST_CASE("operator coefficients match the characteristic polynomial") {
  oracle::Rng rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    const SimpsonParam u = random_u(rng);
    const double a = rng.uniform(-1, 1);
    const double b = a + rng.uniform(0.5, 3);
    const SimpsonOperator op = simpson_operator(a, b, u);
    const CharacteristicSpec spec = simpson_spec(a, b, u);
    const std::vector<double>& c = spec.real_coeffs();
    CHECK(oracle::close_rel(c[0], op.c0, 1e-12));
    CHECK(oracle::close_rel(c[2], op.c2, 1e-12));
    CHECK(std::abs(c[1]) <= 1e-12 * op.c0);
    CHECK(std::abs(c[3]) <= 1e-12 * std::max(1.0, op.c0));
  }
}

TEST_CASE("kernel vanishes at the ends, is symmetric and peaks at the midpoint") {
  oracle::Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const SimpsonParam u = random_u(rng, trial < 10 ? 3.0 : 12.0);
    const double a = rng.uniform(-1, 1);
    const double b = a + rng.uniform(0.5, 3);
    const double m = 0.5 * (a + b);
    const double peak = simpson_kernel(a, b, u, m);
    CAPTURE(u.w());
    CAPTURE(u.v());
    CHECK(peak > 0.0);
    CHECK(std::abs(simpson_kernel(a, b, u, a)) <= 1e-13 * peak + 1e-15);
    CHECK(std::abs(simpson_kernel(a, b, u, b)) <= 1e-13 * peak + 1e-15);
    CHECK(oracle::close_rel(simpson_kernel_peak(a, b, u), peak, 1e-11));
    if (u.w() < 8) CHECK(oracle::close_rel(peak_by_hand(a, b, u.w(), u.v()), peak, 1e-10));
    for (int i = 0; i < 20; ++i) {
      const double t = rng.uniform(a, b);
      CHECK(std::abs(simpson_kernel(a, b, u, t) - simpson_kernel(a, b, u, a + b - t)) <= 1e-11 * peak);
    }
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double t = a + (m - a) * i / 200;
      const double g = simpson_kernel(a, b, u, t);
      CHECK(g >= -1e-13 * peak);
      CHECK(g >= prev - 1e-13 * peak);
      prev = g;
    }
  }
  CHECK_THROWS_AS(simpson_kernel(0, 1, SimpsonParam(1, 1), 1.5), std::domain_error);
}

TEST_CASE("closed-form kernel matches the general construction") {
  oracle::Rng rng(89);
  for (int trial = 0; trial < 10; ++trial) {
    const SimpsonParam u = random_u(rng, 5.0);
    const GeneralKernel g(simpson_u_measure(0.0, 2.0, u), simpson_spec(0.0, 2.0, u));
    const double peak = simpson_kernel_peak(0.0, 2.0, u);
    for (int i = 0; i <= 8; ++i) {
      const double t = 0.25 * i;
      CHECK(std::abs(simpson_kernel(0.0, 2.0, u, t) - g(t)) <= 1e-9 * peak);
    }
  }
}

TEST_CASE("kernel integral closed form") {
  const oracle::GaussLegendre gl(12);
  oracle::Rng rng(97);
  for (int trial = 0; trial < 8; ++trial) {
    const SimpsonParam u = random_u(rng);
    const double a = rng.uniform(-1, 1);
    const double b = a + rng.uniform(0.5, 2);
    const double numeric = gl.integrate([&](double t) { return simpson_kernel(a, b, u, t); }, a, b, 64,
                                        {0.5 * (a + b)});
    CHECK(oracle::close_rel(simpson_kernel_integral(a, b, u), numeric, 1e-12));
  }
}

TEST_CASE("h_u endpoints, monotonicity and relation to g_u") {
  oracle::Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const SimpsonParam u = random_u(rng, 4.0);
    const double w = u.w();
    const double v = u.v();
    const double h1 = 4 * std::pow(v * std::sinh(w) - w * std::sin(v), 2);
    // h_u is a sum of terms of size ~ 8 w v sinh(w) sin(v) that cancel at s = 0.
    const double term_scale = 8 * w * v * std::sinh(w) * std::sin(v);
    CHECK(std::abs(simpson_h(u, 0.0)) <= 1e-15 * term_scale);
    CHECK(oracle::close_rel(simpson_h(u, 1.0), h1, 1e-10));
    double prev = simpson_h(u, 0.0);
    for (int i = 1; i <= 100; ++i) {
      const double cur = simpson_h(u, i / 100.0);
      CHECK(cur > prev);
      prev = cur;
    }
    const double a = 0.0;
    const double b = 1.5;
    const double denom = 128 * std::pow(w * w + v * v, 2) * w * v * std::sinh(w) * std::sin(v);
    for (double s : {0.1, 0.4, 0.75, 1.0}) {
      const double t = s * 0.5 * (a + b) + (1 - s) * b;
      const double expected = std::pow(b - a, 3) * simpson_h(u, s) / denom;
      const double expected_err = 1e-15 * term_scale * std::pow(b - a, 3) / denom;
      CHECK(std::abs(simpson_kernel(a, b, u, t) - expected) <= 1e-11 * simpson_kernel_peak(a, b, u) + expected_err);
    }
  }
}

TEST_CASE("cot chain inequality") {
  oracle::Rng rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const double w = rng.uniform(1e-3, 20.0);
    const double v = rng.uniform(1e-3, kPi - 1e-3);
    const double s = rng.uniform(1e-3, 1 - 1e-3);
    const CotChainMargins m = cot_chain_margins(w, v, s);
    CHECK(m.left > 0.0);
    CHECK(m.right > 0.0);
    const long double lv = v;
    const long double lw = w;
    const long double ls = s;
    const long double left = ls * lv * (std::cos(ls * lv) / std::sin(ls * lv) - std::cos(lv) / std::sin(lv)) - (1 - ls);
    CHECK(std::abs(m.left - static_cast<double>(left)) <= 1e-9 * std::max(1.0L, std::fabs(left)));
    const long double right = (1 - ls) - ls * lw * (1 / std::tanh(ls * lw) - 1 / std::tanh(lw));
    CHECK(std::abs(m.right - static_cast<double>(right)) <= 1e-9 * std::max(1.0L, std::fabs(right)));
  }
  CHECK_THROWS_AS(cot_chain_margins(1.0, 1.0, 1.0), std::domain_error);
}
