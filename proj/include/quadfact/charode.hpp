#pragma once

#include <vector>

#include "quadfact/common.hpp"
#include "quadfact/expoly.hpp"
#include "quadfact/smooth_function.hpp"

namespace quadfact {

struct Root {
  cplx value;
  int multiplicity = 1;
};

/// Monic characteristic polynomial P(z) = prod (z - lambda_i)^{m_i}
/// = c_n z^n + ... + c_0 with c_n = 1, and the operator
/// D f = c_n f^{(n)} + ... + c_0 f it defines.
class CharacteristicSpec {
 public:
  /// Throws std::invalid_argument on an empty root list, a nonpositive
  /// multiplicity or two roots closer than 1e-9 (1 + max |lambda|).
  explicit CharacteristicSpec(std::vector<Root> roots);

  const std::vector<Root>& roots() const { return roots_; }
  /// c_0 .. c_n.
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// True when the root multiset is invariant under conjugation; the
  /// coefficients are then exactly real.
  bool conjugate_closed() const { return conjugate_closed_; }
  bool has_real_coeffs() const { return !real_coeffs_.empty(); }
  /// c as reals; throws NumericalError if some c_i is not real.
  const std::vector<double>& real_coeffs() const;

 private:
  std::vector<Root> roots_;
  std::vector<cplx> coeffs_;
  bool conjugate_closed_ = false;
  std::vector<double> real_coeffs_;  // empty unless every c_i is real
};

CharacteristicSpec coeffs_from_roots(std::vector<Root> roots);

/// The solution of D w = 0 with w^{(i)}(0) = delta_{i,n-1}.
/// Throws NumericalError when some P_i(lambda_i) underflows (near-coincident
/// roots).
ExpPolynomial characteristic_solution(const CharacteristicSpec& spec);

/// (D f)(t) for real coefficients. Throws OrderError if f.max_order() < n.
double apply_dc(const CharacteristicSpec& spec, const SmoothFunction& f, double t);
/// D applied to an exponential polynomial, in closed form.
ExpPolynomial apply_dc(const CharacteristicSpec& spec, const ExpPolynomial& p);

struct TaylorSplit {
  double polynomial_part = 0.0;
  double remainder_integral = 0.0;
  double sum() const { return polynomial_part + remainder_integral; }
};

/// sum_{j<n} f^{(j)}(a) sum_{i<n-j} c_{i+j+1} w^{(i)}(x-a).
double taylor_polynomial_part(const CharacteristicSpec& spec, const SmoothFunction& f,
                              double a, double x);

/// f(x) = sum_{j<n} f^{(j)}(a) sum_{i<n-j} c_{i+j+1} w^{(i)}(x-a)
///        + integral_a^x (D f)(t) w(x-t) dt,
/// with the integral done by the adaptive oracle at tolerance `tol`.
TaylorSplit taylor_expansion(const CharacteristicSpec& spec, const SmoothFunction& f,
                             double a, double x, double tol = 1e-12);

}  // namespace quadfact
