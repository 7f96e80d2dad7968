#include "quadfact/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace quadfact {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss = boost::math::quadrature::gauss<double, 7>;

constexpr std::size_t kMaxPanels = std::size_t{1} << 20;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  double abs_value;  // Kronrod estimate of the integral of |h|
};

Panel evaluate_panel(const RealFunction& h, double lo, double hi) {
  const auto& xk = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double f0 = h(center);
  double kronrod = f0 * wk[0];
  double gauss = f0 * wg[0];
  double l1 = std::abs(f0) * wk[0];
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double fp = h(center + half * xk[i]);
    const double fm = h(center - half * xk[i]);
    kronrod += (fp + fm) * wk[i];
    l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
    // Gauss nodes sit at the even Kronrod positions.
    if (i % 2 == 0) gauss += (fp + fm) * wg[i / 2];
  }
  if (!std::isfinite(kronrod)) {
    throw NumericalError("integrate_adaptive: integrand is not finite on [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return Panel{lo, hi, kronrod * half, std::abs(kronrod - gauss) * half,
               l1 * half};
}

bool worse(const Panel& x, const Panel& y) { return x.error < y.error; }

}  // namespace

QuadratureResult integrate_adaptive(const RealFunction& h, double a, double b,
                                    double tol,
                                    std::span<const double> breakpoints,
                                    double floor) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tol must be > 0");
  if (a == b) return {};
  if (a > b) {
    QuadratureResult r = integrate_adaptive(h, b, a, tol, breakpoints, floor);
    r.value = -r.value;
    return r;
  }

  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Panel> heap;
  heap.reserve(64);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    heap.push_back(evaluate_panel(h, cuts[i], cuts[i + 1]));
  }
  std::make_heap(heap.begin(), heap.end(), worse);

  // Deterministic totals: summation in increasing-abscissa order.
  auto totals = [&heap]() {
    std::vector<const Panel*> order;
    order.reserve(heap.size());
    for (const Panel& p : heap) order.push_back(&p);
    std::sort(order.begin(), order.end(),
              [](const Panel* x, const Panel* y) { return x->lo < y->lo; });
    double value = 0.0;
    double error = 0.0;
    for (const Panel* p : order) {
      value += p->value;
      error += p->error;
    }
    return std::pair{value, error};
  };

  double value = 0.0;
  double error = 0.0;
  for (const Panel& p : heap) {
    value += p.value;
    error += p.error;
  }

  for (;;) {
    if (error <= tol * (floor + std::abs(value))) {
      std::tie(value, error) = totals();
      if (error <= tol * (floor + std::abs(value))) break;
    }
    if (heap.size() >= kMaxPanels) {
      throw NumericalError("integrate_adaptive: subdivision cap exceeded");
    }
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Panel worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.lo + worst.hi);
    const bool too_narrow =
        !(mid > worst.lo && mid < worst.hi) ||
        (worst.hi - worst.lo) <= 16.0 * kEps * std::max(std::abs(worst.lo), std::abs(worst.hi));
    if (too_narrow || worst.error <= 50.0 * kEps * worst.abs_value) {
      throw NumericalError(
          "integrate_adaptive: tolerance below floating-point resolution");
    }

    const Panel left = evaluate_panel(h, worst.lo, mid);
    const Panel right = evaluate_panel(h, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), worse);
  }

  return QuadratureResult{value, error, heap.size()};
}

}  // namespace quadfact
