#pragma once

#include <vector>

#include "quadfact/charode.hpp"
#include "quadfact/expoly.hpp"
#include "quadfact/measure.hpp"
#include "quadfact/zeta.hpp"

namespace quadfact {

struct KernelOptions {
  bool validate = true;  // check the spectral conditions before building
  double tol = 1e-8;     // relative tolerance for those checks
};

/// g(t) = integral_{[t,b]} w(x - t) dmu(x) for the characteristic solution w
/// of `spec`, so that A(f) = integral_a^b (D f)(t) g(t) dt.
class GeneralKernel {
 public:
  /// Throws KernelConditionError if validation is on and some root lambda_i
  /// of the characteristic polynomial is not a root of S of multiplicity >= m_i.
  GeneralKernel(Measure mu, CharacteristicSpec spec, KernelOptions opts = {});

  double operator()(double t) const;

  const Measure& measure() const { return mu_; }
  const CharacteristicSpec& spec() const { return spec_; }
  const ExpPolynomial& omega() const { return omega_; }

 private:
  Measure mu_;
  CharacteristicSpec spec_;
  ExpPolynomial omega_;
  ExpPolynomial omega_primitive_;  // vanishes at 0
};

/// Throws KernelConditionError unless every root of `spec` is a root of
/// S_mu of at least its multiplicity, judged relative to the term scale.
void validate_spectral_roots(const Measure& mu, const CharacteristicSpec& spec, double tol);

double kernel_general(const Measure& mu, const CharacteristicSpec& spec, double t,
                      KernelOptions opts = {});

/// g(t) = integral_{[t,b]} zeta'(x - t) dmu(x), the kernel pairing with
/// f^{(n)} - gamma f^{(k)}.
class ZetaKernel {
 public:
  /// Throws KernelConditionError if validation is on and mu does not kill
  /// x^i (i < k) and exp(r x) for every (n-k)-th root r of gamma. For
  /// gamma = 0 all moments of order < n must vanish.
  ZetaKernel(Measure mu, ZetaParams params, KernelOptions opts = {});

  double operator()(double t) const;

  const Measure& measure() const { return mu_; }
  const ZetaParams& params() const { return params_; }

 private:
  Measure mu_;
  ZetaParams params_;
};

double kernel_zeta(const Measure& mu, const ZetaParams& params, double t,
                   KernelOptions opts = {});

/// The (n-k)-th roots of gamma, starting from the one of smallest argument.
std::vector<cplx> zeta_exponent_roots(const ZetaParams& params);
/// Roots of lambda^n - gamma lambda^k with multiplicities.
CharacteristicSpec zeta_characteristic_spec(const ZetaParams& params);

/// lambda_j = 2 tau_{n_j} / (b - a) for the given tangent fixed-point indices.
std::vector<double> trapezoid_frequencies(double a, double b, const std::vector<int>& indices);
/// Operator roots for a trapezoid index set: 0 (double) when n_1 = 0 and
/// +-i lambda_j otherwise.
CharacteristicSpec trapezoid_spec(double a, double b, const std::vector<int>& indices);
/// Closed-form trapezoid kernel for the strictly increasing index set
/// 0 <= n_1 < ... < n_k. Throws std::invalid_argument on a bad index set.
double trapezoid_kernel_multi(double a, double b, const std::vector<int>& indices, double t);

// ---------------------------------------------------------------------------
// Simpson-type rules

/// u = w + i v with w > 0 and 0 < v < pi.
class SimpsonParam {
 public:
  /// Throws std::domain_error outside the admissible region.
  SimpsonParam(double w, double v);

  double w() const { return w_; }
  double v() const { return v_; }
  cplx u() const { return {w_, v_}; }
  double abs2() const { return w_ * w_ + v_ * v_; }
  cplx lambda(double a, double b) const { return 2.0 * u() / (b - a); }

 private:
  double w_;
  double v_;
};

struct SimpsonWeights {
  double alpha;
  double beta;
};

/// Endpoint and midpoint weights for which S vanishes at +-lambda_u and
/// +-conj(lambda_u). Accurate for small |u|, where they tend to 1/6, 2/3.
SimpsonWeights simpson_alpha_beta(const SimpsonParam& u);
/// 2 alpha + beta - 1, computed without cancellation.
double simpson_excess(const SimpsonParam& u);

Measure simpson_u_measure(double a, double b, const SimpsonParam& u);
/// Roots +-lambda_u, +-conj(lambda_u).
CharacteristicSpec simpson_spec(double a, double b, const SimpsonParam& u);
/// Real coefficients of f'''' + c2 f'' + c0 f for the Simpson operator.
struct SimpsonOperator {
  double c2;
  double c0;
};
SimpsonOperator simpson_operator(double a, double b, const SimpsonParam& u);

/// max g_u = g_u((a+b)/2) in closed form.
double simpson_kernel_peak(double a, double b, const SimpsonParam& u);
/// integral_a^b g_u = (b-a)^4 (2 alpha + beta - 1) / (16 |u|^4).
double simpson_kernel_integral(double a, double b, const SimpsonParam& u);

/// g_u(t) on [a, b]; throws std::domain_error outside.
double simpson_kernel(double a, double b, const SimpsonParam& u, double t);
/// Real form of h_u(s), s in [0, 1].
double simpson_h(const SimpsonParam& u, double s);

/// Margins of v(cot(sv) - cot v) > (1-s)/s > w(coth(sw) - coth w), each
/// multiplied by s and evaluated without cancellation.
struct CotChainMargins {
  double left;   // s v (cot(sv) - cot v) - (1 - s)
  double right;  // (1 - s) - s w (coth(sw) - coth w)
};
CotChainMargins cot_chain_margins(double w, double v, double s);

}  // namespace quadfact
