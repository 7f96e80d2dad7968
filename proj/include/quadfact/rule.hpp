#pragma once

#include <string>
#include <vector>

#include "quadfact/charode.hpp"
#include "quadfact/kernels.hpp"
#include "quadfact/measure.hpp"
#include "quadfact/smooth_function.hpp"
#include "quadfact/zeta.hpp"

namespace quadfact {

/// A remainder functional together with its factorization
/// A(f) = integral_a^b (D f)(t) g(t) dt.
struct Rule {
  std::string label;
  Measure measure;
  std::vector<double> op_coeffs;    // c_0 .. c_n of D, real
  RealFunction kernel;              // g on [a, b]
  std::vector<double> breakpoints;  // interior points where g may have a kink
  std::vector<double> sup_seeds;    // known candidates for the extrema of |g|

  double a() const { return measure.a(); }
  double b() const { return measure.b(); }
  int order() const { return static_cast<int>(op_coeffs.size()) - 1; }
  /// (D f)(t). Throws OrderError if f has too few derivatives.
  double apply_operator(const SmoothFunction& f, double t) const;
  /// sum_i |c_i f^{(i)}(t)|, the size of the pieces that make up (D f)(t).
  double operator_scale(const SmoothFunction& f, double t) const;
};

enum class KernelPath { closed_form, general };

/// Kernel built from the measure and operator roots (exp-polynomial path).
Rule general_rule(std::string label, const Measure& mu, const CharacteristicSpec& spec,
                  KernelOptions opts = {});

/// Trapezoid remainder with D f = f'' + lambda_n^2 f, lambda_n = 2 tau_n / (b - a).
Rule trapezoid_rule(double a, double b, int n, KernelPath path = KernelPath::closed_form);
/// Trapezoid remainder with D = prod_j (d^2 + lambda_{n_j}^2).
Rule trapezoid_multi_rule(double a, double b, const std::vector<int>& indices,
                          KernelPath path = KernelPath::closed_form);
/// Simpson-type remainder with weights alpha_u, beta_u.
Rule simpson_rule(double a, double b, const SimpsonParam& u,
                  KernelPath path = KernelPath::closed_form);
/// Classical Simpson remainder with D f = f''''.
Rule classical_simpson_rule(double a, double b);
/// Trapezoid measure paired with D f = f^{(n)} - gamma f^{(k)}.
Rule zeta_rule(double a, double b, const ZetaParams& params);

/// trap:n | trap-multi:n1,n2,... | simpson:w,v | simpson-classical | zeta:n,k,gamma.
/// Throws std::invalid_argument on malformed input.
Rule parse_rule_selector(const std::string& selector, double a, double b);
/// poly:c0,c1,... | exp:beta | sin:beta | cos:beta.
SmoothFunction parse_function_selector(const std::string& selector);

}  // namespace quadfact
