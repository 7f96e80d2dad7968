#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "quadfact/common.hpp"
#include "quadfact/expoly.hpp"

namespace quadfact {

/// Closed interval on which a SmoothFunction may be evaluated.
struct FunctionDomain {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
};

/// A real test function that knows its own derivatives exactly.
///
/// Built-in families also carry a closed-form definite integral, which
/// apply_functional uses instead of numerical quadrature.
class SmoothFunction {
 public:
  using Evaluator = std::function<double(int order, double x)>;
  using Integral = std::function<double(double lo, double hi)>;

  using Domain = FunctionDomain;

  static constexpr int kUnboundedOrder = std::numeric_limits<int>::max();

  SmoothFunction(std::string label, int max_order, Evaluator eval,
                 Integral integral = {}, Domain domain = {});

  const std::string& label() const { return label_; }
  int max_order() const { return max_order_; }
  const Domain& domain() const { return domain_; }

  double operator()(double x) const { return derivative(0, x); }
  /// f^{(order)}(x). Throws OrderError above max_order and
  /// std::domain_error outside the domain.
  double derivative(int order, double x) const;

  bool has_integral() const { return static_cast<bool>(integral_); }
  /// Closed-form integral over [lo, hi]; only valid when has_integral().
  double integral(double lo, double hi) const;

  bool defined_on(double lo, double hi) const {
    return domain_.lo <= lo && hi <= domain_.hi;
  }

  SmoothFunction with_max_order(int max_order) const;
  SmoothFunction with_label(std::string label) const;

  friend SmoothFunction operator+(const SmoothFunction& f, const SmoothFunction& g);
  friend SmoothFunction operator-(const SmoothFunction& f, const SmoothFunction& g);
  friend SmoothFunction operator*(double s, const SmoothFunction& f);

 private:
  std::string label_;
  int max_order_;
  Evaluator eval_;
  Integral integral_;
  Domain domain_;
};

/// x^m
SmoothFunction monomial(int m);
/// sum_i coeffs[i] x^i
SmoothFunction polynomial(std::vector<double> coeffs);
/// exp(beta x)
SmoothFunction exponential(double beta);
/// sin(beta x)
SmoothFunction sine(double beta);
/// cos(beta x)
SmoothFunction cosine(double beta);
/// x -> Re p(x), with derivatives Re p^{(j)}(x).
SmoothFunction real_part(ExpPolynomial p, std::string label = "expoly");

}  // namespace quadfact
