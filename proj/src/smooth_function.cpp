#include "quadfact/smooth_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace quadfact {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SmoothFunction::SmoothFunction(std::string label, int max_order, Evaluator eval,
                               Integral integral, Domain domain)
    : label_(std::move(label)),
      max_order_(max_order),
      eval_(std::move(eval)),
      integral_(std::move(integral)),
      domain_(domain) {
  if (max_order_ < 0) throw std::invalid_argument("SmoothFunction: negative max_order");
  if (!eval_) throw std::invalid_argument("SmoothFunction: missing evaluator");
  if (!(domain_.lo < domain_.hi)) throw std::invalid_argument("SmoothFunction: empty domain");
}

double SmoothFunction::derivative(int order, double x) const {
  if (order < 0) throw std::invalid_argument("SmoothFunction: negative derivative order");
  if (order > max_order_) {
    throw OrderError(label_ + ": derivative of order " + std::to_string(order) +
                     " requested, max_order is " + std::to_string(max_order_));
  }
  if (!(x >= domain_.lo && x <= domain_.hi)) {
    throw std::domain_error(label_ + ": evaluated outside its domain at x = " + fmt(x));
  }
  return eval_(order, x);
}

double SmoothFunction::integral(double lo, double hi) const {
  if (!integral_) throw std::logic_error(label_ + ": no closed-form integral");
  if (!defined_on(std::min(lo, hi), std::max(lo, hi))) {
    throw std::domain_error(label_ + ": integral outside its domain");
  }
  return integral_(lo, hi);
}

SmoothFunction SmoothFunction::with_max_order(int max_order) const {
  SmoothFunction copy = *this;
  if (max_order < 0) throw std::invalid_argument("SmoothFunction: negative max_order");
  copy.max_order_ = max_order;
  return copy;
}

SmoothFunction SmoothFunction::with_label(std::string label) const {
  SmoothFunction copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

SmoothFunction operator+(const SmoothFunction& f, const SmoothFunction& g) {
  SmoothFunction::Integral integral;
  if (f.integral_ && g.integral_) {
    integral = [fi = f.integral_, gi = g.integral_](double lo, double hi) {
      return fi(lo, hi) + gi(lo, hi);
    };
  }
  SmoothFunction::Domain dom{std::max(f.domain_.lo, g.domain_.lo),
                             std::min(f.domain_.hi, g.domain_.hi)};
  return SmoothFunction(
      "(" + f.label_ + ")+(" + g.label_ + ")", std::min(f.max_order_, g.max_order_),
      [fe = f.eval_, ge = g.eval_](int j, double x) { return fe(j, x) + ge(j, x); },
      std::move(integral), dom);
}

SmoothFunction operator*(double s, const SmoothFunction& f) {
  SmoothFunction::Integral integral;
  if (f.integral_) {
    integral = [s, fi = f.integral_](double lo, double hi) { return s * fi(lo, hi); };
  }
  return SmoothFunction(
      fmt(s) + "*(" + f.label_ + ")", f.max_order_,
      [s, fe = f.eval_](int j, double x) { return s * fe(j, x); }, std::move(integral),
      f.domain_);
}

SmoothFunction operator-(const SmoothFunction& f, const SmoothFunction& g) {
  SmoothFunction r = f + (-1.0) * g;
  return r.with_label("(" + f.label_ + ")-(" + g.label_ + ")");
}

SmoothFunction polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  std::string label = "poly:";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) label += ",";
    label += fmt(coeffs[i]);
  }
  auto eval = [coeffs](int j, double x) {
    // Horner on the j-th derivative's coefficients.
    const int deg = static_cast<int>(coeffs.size()) - 1;
    double acc = 0.0;
    for (int i = deg; i >= j; --i) {
      double falling = 1.0;
      for (int r = 0; r < j; ++r) falling *= i - r;
      acc = acc * x + falling * coeffs[i];
    }
    return acc;
  };
  auto integral = [coeffs](double lo, double hi) {
    auto prim = [&coeffs](double x) {
      double acc = 0.0;
      for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        acc = acc * x + coeffs[i] / (i + 1);
      }
      return acc * x;
    };
    return prim(hi) - prim(lo);
  };
  return SmoothFunction(label, SmoothFunction::kUnboundedOrder, eval, integral);
}

SmoothFunction monomial(int m) {
  if (m < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<double> coeffs(m + 1, 0.0);
  coeffs[m] = 1.0;
  return polynomial(std::move(coeffs)).with_label("x^" + std::to_string(m));
}

SmoothFunction exponential(double beta) {
  auto eval = [beta](int j, double x) { return std::pow(beta, j) * std::exp(beta * x); };
  auto integral = [beta](double lo, double hi) {
    if (beta == 0.0) return hi - lo;
    return std::exp(beta * lo) * std::expm1(beta * (hi - lo)) / beta;
  };
  return SmoothFunction("exp:" + fmt(beta), SmoothFunction::kUnboundedOrder, eval, integral);
}

SmoothFunction sine(double beta) {
  auto eval = [beta](int j, double x) {
    const double s = std::pow(beta, j);
    switch (j % 4) {
      case 0: return s * std::sin(beta * x);
      case 1: return s * std::cos(beta * x);
      case 2: return -s * std::sin(beta * x);
      default: return -s * std::cos(beta * x);
    }
  };
  auto integral = [beta](double lo, double hi) {
    if (beta == 0.0) return 0.0;
    // cos(b lo) - cos(b hi), written without cancellation
    return 2.0 * std::sin(0.5 * beta * (lo + hi)) * std::sin(0.5 * beta * (hi - lo)) / beta;
  };
  return SmoothFunction("sin:" + fmt(beta), SmoothFunction::kUnboundedOrder, eval, integral);
}

SmoothFunction cosine(double beta) {
  auto eval = [beta](int j, double x) {
    const double s = std::pow(beta, j);
    switch (j % 4) {
      case 0: return s * std::cos(beta * x);
      case 1: return -s * std::sin(beta * x);
      case 2: return -s * std::cos(beta * x);
      default: return s * std::sin(beta * x);
    }
  };
  auto integral = [beta](double lo, double hi) {
    if (beta == 0.0) return hi - lo;
    return 2.0 * std::cos(0.5 * beta * (lo + hi)) * std::sin(0.5 * beta * (hi - lo)) / beta;
  };
  return SmoothFunction("cos:" + fmt(beta), SmoothFunction::kUnboundedOrder, eval, integral);
}

SmoothFunction real_part(ExpPolynomial p, std::string label) {
  ExpPolynomial prim = p.antiderivative();
  auto eval = [p](int j, double x) { return p.derivative_at(j, x).real(); };
  auto integral = [prim](double lo, double hi) {
    return (prim(hi) - prim(lo)).real();
  };
  return SmoothFunction(std::move(label), SmoothFunction::kUnboundedOrder, eval, integral);
}

}  // namespace quadfact
