#include "quadfact/verify.hpp"

#include <cmath>
#include <vector>

#include "quadfact/oracle.hpp"

namespace quadfact {

VerificationRecord verify_factorization(const Rule& rule, const SmoothFunction& f, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("verify_factorization: tol must be positive");
  VerificationRecord rec;
  rec.rule = rule.label;
  rec.function = f.label();
  rec.lhs = apply_functional(rule.measure, f);

  std::vector<double> cuts = rule.breakpoints;
  for (double x : rule.measure.atom_locations()) cuts.push_back(x);
  const RealFunction integrand = [&rule, &f](double t) {
    return rule.apply_operator(f, t) * rule.kernel(t);
  };
  // A tenth of the budget goes to the quadrature so its error cannot mask a
  // genuine mismatch.
  rec.rhs = integrate_adaptive(integrand, rule.a(), rule.b(), tol / 10.0, cuts).value;
  rec.abs_err = std::abs(rec.lhs - rec.rhs);
  rec.pass = rec.abs_err <= tol * (1.0 + std::abs(rec.lhs));
  return rec;
}

VerificationRecord verify_factorization(const Measure& mu, const CharacteristicSpec& spec,
                                        const SmoothFunction& f, double tol) {
  return verify_factorization(general_rule("measure", mu, spec), f, tol);
}

}  // namespace quadfact
