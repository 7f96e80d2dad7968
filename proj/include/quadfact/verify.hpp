#pragma once

#include <string>

#include "quadfact/charode.hpp"
#include "quadfact/measure.hpp"
#include "quadfact/rule.hpp"
#include "quadfact/smooth_function.hpp"

namespace quadfact {

struct VerificationRecord {
  std::string rule;
  std::string function;
  double lhs = 0.0;  // A(f), computed directly
  double rhs = 0.0;  // integral of (D f) g by adaptive quadrature
  double abs_err = 0.0;
  bool pass = false;
};

/// Checks A(f) = integral_a^b (D f)(t) g(t) dt. Passes when
/// |lhs - rhs| <= tol (1 + |lhs|).
VerificationRecord verify_factorization(const Rule& rule, const SmoothFunction& f, double tol);
VerificationRecord verify_factorization(const Measure& mu, const CharacteristicSpec& spec,
                                        const SmoothFunction& f, double tol);

}  // namespace quadfact
