#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"
#include "quadfact/rootfind.hpp"
#include "quadfact/zeta.hpp"

using namespace quadfact;

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

TEST_CASE("bisection") {
  const double r = bisect({[](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-14});
  CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(bisect({[](double x) { return x; }, 0.0, 1.0, 1e-12}) == 0.0);
  CHECK_THROWS_AS(bisect({[](double x) { return x + 5; }, 0.0, 1.0, 1e-12}), std::invalid_argument);
  CHECK_THROWS_AS(bisect({[](double x) { return x; }, 1.0, -1.0, 1e-12}), std::invalid_argument);
  CHECK_THROWS_AS(bisect({[](double x) { return x; }, -1.0, 1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("tan fixed points") {
  CHECK(tan_fixed_point(0) == 0.0);
  CHECK(tan_fixed_point(1) == doctest::Approx(4.493409457909).epsilon(1e-12));
  CHECK(tan_fixed_point(2) == doctest::Approx(7.725251836938).epsilon(1e-12));
  for (int n = 1; n <= 60; ++n) {
    const double tau = tan_fixed_point(n);
    CAPTURE(n);
    CHECK(tau > n * kPi);
    CHECK(tau < (n + 0.5) * kPi);
    CHECK(std::abs(tau - static_cast<double>(oracle::tau_bisection(n))) <= 4e-16 * tau);
    if (n <= 10) CHECK(std::abs(std::tan(tau) - tau) <= 1e-12 * (1 + tau));
  }
  CHECK_THROWS_AS(tan_fixed_point(-1), std::invalid_argument);
}

TEST_CASE("first positive and last negative roots") {
  const RealFunction sin_fn = [](double t) { return std::sin(t); };
  CHECK(rho_plus(sin_fn, 0.01, 10.0, 1e-13) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(rho_minus(sin_fn, 0.01, 10.0, 1e-13) == doctest::Approx(-kPi).epsilon(1e-12));
  CHECK(rho_plus([](double t) { return t; }, 0.01, 10.0, 1e-13) == kInf);
  CHECK(rho_minus([](double t) { return 1 + t * t; }, 0.01, 10.0, 1e-13) == -kInf);
  const ZetaParams p{2, 0, -1.0};
  CHECK(rho_plus([&p](double t) { return zeta_derivative(p, 1, t); }, 0.01, 10.0, 1e-13) ==
        doctest::Approx(kPi).epsilon(1e-12));
  const ExpPolynomial w = characteristic_solution(CharacteristicSpec({{cplx{0, 1}, 1}, {cplx{0, -1}, 1}}));
  CHECK(rho_minus([&w](double t) { return w(t).real(); }, 0.01, 10.0, 1e-13) ==
        doctest::Approx(-kPi).epsilon(1e-12));
  // A root landing exactly on a scan point.
  CHECK(rho_plus([](double t) { return t - 0.5; }, 0.25, 10.0, 1e-13) == 0.5);
}

TEST_CASE("mean-value point examples") {
  const MeanValuePoint cubic = find_mean_value_point(CharacteristicSpec({{0.0, 2}}), monomial(3), 0.0, 1.0);
  // f(0) = f'(0) = 0, so R = f(1) = 1 and 6 xi / 2 = 1.
  CHECK(cubic.xi == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  CHECK(cubic.remainder == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cubic.weight_integral == doctest::Approx(0.5).epsilon(1e-14));

  const CharacteristicSpec hyp({{1.0, 1}, {-1.0, 1}});
  const MeanValuePoint ker = find_mean_value_point(hyp, exponential(-1.0), 0.4, 1.0);
  CHECK(ker.xi == doctest::Approx(0.7));

  const CharacteristicSpec osc({{cplx{0, 1}, 1}, {cplx{0, -1}, 1}});
  const MeanValuePoint e = find_mean_value_point(osc, exponential(1.0), 0.0, 1.0);
  const double R = std::exp(1.0) - std::cos(1.0) - std::sin(1.0);
  CHECK(e.xi == doctest::Approx(std::log(R / (2 * (1 - std::cos(1.0))))).epsilon(1e-9));
  CHECK(e.residual <= 1e-10 * (1 + std::abs(R)));

  CHECK(find_mean_value_point(osc, sine(0.5), 1.0, 1.0).xi == 1.0);
}

TEST_CASE("mean-value point works leftwards") {
  const MeanValuePoint p = find_mean_value_point(CharacteristicSpec({{0.0, 2}}), monomial(3), 1.0, 0.0);
  CHECK(p.xi > 0.0);
  CHECK(p.xi < 1.0);
  CHECK(p.residual <= 1e-10 * (1 + std::abs(p.remainder)));
}

TEST_CASE("mean-value precondition is enforced") {
  const CharacteristicSpec osc({{cplx{0, 1}, 1}, {cplx{0, -1}, 1}});
  CHECK_THROWS_AS(find_mean_value_point(osc, exponential(1.0), 0.0, 4.0), std::domain_error);
  CHECK_THROWS_AS(find_mean_value_point(osc, exponential(1.0), 0.0, -3.5), std::domain_error);
}

TEST_CASE("mean-value points lie strictly inside for random inputs") {
  oracle::Rng rng(61);
  int found = 0;
  for (int trial = 0; trial < 200 && found < 30; ++trial) {
    const CharacteristicSpec spec = gen::real_spec(rng, 4);
    const SmoothFunction f = gen::builtin_function(rng);
    const double a = rng.uniform(-1, 1);
    const double x = a + rng.uniform(-1.5, 1.5);
    MeanValuePoint p;
    try {
      p = find_mean_value_point(spec, f, a, x);
    } catch (const std::domain_error&) {
      continue;
    }
    ++found;
    CHECK(p.residual <= 1e-10 * (1 + std::abs(p.remainder)));
    if (p.remainder != 0.0) {
      CHECK(p.xi > std::min(a, x));
      CHECK(p.xi < std::max(a, x));
    }
  }
  CHECK(found >= 20);
}

TEST_CASE("hyperbolic and trigonometric inequality margins") {
  oracle::Rng rng(67);
  for (int i = 0; i < 200; ++i) {
    const double t = rng.uniform(0.0, 20.0) + 1e-300;
    CHECK(sinh_margin(t) > 0.0);
    CHECK(coth_margin(t) > 0.0);
    CHECK(t / std::sinh(t) < 1.0);
    CHECK(t / std::tanh(t) > 1.0);
  }
  for (int i = 0; i < 200; ++i) {
    const double t = rng.uniform(1e-9, kPi - 1e-9);
    CHECK(cot_margin(t) > 0.0);
    CHECK(sin_margin(t) > 0.0);
  }
  // Tiny arguments keep full relative accuracy: each margin is ~ t^2 times a constant.
  for (double t : {1e-8, 1e-5, 1e-3}) {
    CHECK(sinh_margin(t) == doctest::Approx(t * t / 6).epsilon(1e-6));
    CHECK(coth_margin(t) == doctest::Approx(t * t / 3).epsilon(1e-6));
    CHECK(cot_margin(t) == doctest::Approx(t * t / 3).epsilon(1e-6));
    CHECK(sin_margin(t) == doctest::Approx(t * t / 6).epsilon(1e-6));
  }
  for (double t : {0.5, 2.0, 3.0}) {
    const long double lt = t;
    CHECK(cot_margin(t) == doctest::Approx(static_cast<double>(1 - lt * std::cos(lt) / std::sin(lt))).epsilon(1e-14));
    CHECK(sinh_margin(t) == doctest::Approx(static_cast<double>(1 - lt / std::sinh(lt))).epsilon(1e-14));
  }
}
