#pragma once

#include <span>
#include <string>

#include "quadfact/charode.hpp"
#include "quadfact/common.hpp"
#include "quadfact/kernels.hpp"
#include "quadfact/measure.hpp"
#include "quadfact/rule.hpp"
#include "quadfact/smooth_function.hpp"

namespace quadfact {

enum class Exponent { one, two, infinity };

/// q with 1/p + 1/q = 1.
Exponent conjugate(Exponent p);
/// "1", "2" or "inf".
std::string to_string(Exponent p);
/// Accepts 1, 2, inf, infinity. Throws std::invalid_argument otherwise.
Exponent parse_exponent(const std::string& text);

struct SupResult {
  double value = 0.0;
  double argmax = 0.0;
};

/// max |h| on [a, b]: a 2049-point scan of each piece between breakpoints,
/// golden-section refinement around every local maximum and every seed,
/// then a derivative-sign bisection to pin the argument down.
SupResult sup_norm(const RealFunction& h, double a, double b,
                   std::span<const double> breakpoints = {},
                   std::span<const double> seeds = {});

/// ||h||_q on [a, b]. For q = 1, 2 the sign changes of h are located first
/// and |h|^q is integrated piecewise to relative tolerance 1e-11.
double norm_on_interval(const RealFunction& h, double a, double b, Exponent q,
                        std::span<const double> breakpoints = {},
                        std::span<const double> seeds = {});

struct BoundReport {
  std::string rule;
  std::string function;
  Exponent p = Exponent::infinity;  // exponent on D f
  Exponent q = Exponent::one;       // exponent on the kernel
  double functional_value = 0.0;
  double derivative_norm = 0.0;
  double kernel_norm = 0.0;
  double bound = 0.0;
  /// Rounding error of functional_value: 16 eps times the summed magnitude
  /// of its pieces. A value this small cannot be told apart from zero.
  double value_roundoff = 0.0;
  bool holds = false;
};

/// |A(f)| <= ||D f||_p ||g||_q with the norms computed numerically.
BoundReport holder_bound(const Rule& rule, const SmoothFunction& f, Exponent p);
BoundReport holder_bound(const Measure& mu, const CharacteristicSpec& spec,
                         const SmoothFunction& f, Exponent p);

enum class SignVerdict { nonnegative, nonpositive, inconclusive };
std::string to_string(SignVerdict v);

struct SignCheck {
  SignVerdict verdict = SignVerdict::inconclusive;
  double functional_value = 0.0;
  /// The computed value agrees with the verdict (always true when
  /// inconclusive).
  bool consistent = true;
};

/// Samples g and D f on a 513-point grid. When both are one-signed the sign
/// of A(f) follows; a vanishing D f counts as nonnegative.
SignCheck sign_inequality_check(const Rule& rule, const SmoothFunction& f);
SignCheck sign_inequality_check(const Measure& mu, const CharacteristicSpec& spec,
                                const SmoothFunction& f);

struct KernelNormConstants {
  double l1;   // ||g||_1, pairs with ||D f||_inf
  double sup;  // ||g||_inf, pairs with ||D f||_1
};

/// Closed forms for the single-frequency trapezoid kernel.
KernelNormConstants trapezoid_bound_constants(double a, double b, int n);
/// Closed forms for the Simpson-type kernel g_u.
KernelNormConstants simpson_bound_constants(double a, double b, const SimpsonParam& u);

/// Classical Simpson remainder against (b-a)^3/1152 ||f''''||_1 (p = 1) or
/// (b-a)^4/2880 ||f''''||_inf (p = inf). Throws std::invalid_argument for p = 2.
BoundReport classical_simpson_report(double a, double b, const SmoothFunction& f, Exponent p);

/// rule,p,q,value,deriv_norm,kernel_norm,bound,holds
std::string bound_csv_header();
std::string to_csv_row(const BoundReport& r);

/// "%.17g"
std::string format_number(double v);

}  // namespace quadfact
