#pragma once

#include <vector>

#include "quadfact/common.hpp"

namespace quadfact {

/// coeff * t^power * exp(lambda * t)
struct ExpTerm {
  cplx lambda;
  int power = 0;
  cplx coeff;
};

/// Finite sum of ExpTerms in canonical form: terms sorted by
/// (Re lambda, Im lambda, power), no two sharing (lambda, power), no exact
/// zero coefficients.
class ExpPolynomial {
 public:
  ExpPolynomial() = default;
  explicit ExpPolynomial(std::vector<ExpTerm> terms);

  static ExpPolynomial term(cplx lambda, int power, cplx coeff);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  cplx operator()(double t) const;
  /// Value of the order-th derivative at t, without building the derivative.
  cplx derivative_at(int order, double t) const;
  /// Sum over terms of |coeff * t^power * exp(lambda t)| at t.
  double magnitude_at(double t) const;

  ExpPolynomial derivative() const;
  /// Antiderivative normalized to vanish at t = 0.
  ExpPolynomial antiderivative() const;
  /// The function t -> p(t - s).
  ExpPolynomial shifted(double s) const;

  double max_abs_coeff() const;

  ExpPolynomial& operator+=(const ExpPolynomial& other);
  ExpPolynomial& operator*=(cplx scale);

  friend ExpPolynomial operator+(ExpPolynomial lhs, const ExpPolynomial& rhs) {
    return lhs += rhs;
  }
  friend ExpPolynomial operator-(ExpPolynomial lhs, const ExpPolynomial& rhs) {
    return lhs += ExpPolynomial(rhs) *= cplx{-1.0};
  }
  friend ExpPolynomial operator*(cplx scale, ExpPolynomial p) { return p *= scale; }

 private:
  void canonicalize();

  std::vector<ExpTerm> terms_;
};

}  // namespace quadfact
