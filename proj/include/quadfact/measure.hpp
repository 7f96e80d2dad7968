#pragma once

#include <vector>

#include "quadfact/common.hpp"
#include "quadfact/smooth_function.hpp"

namespace quadfact {

struct Atom {
  double x;
  double w;
};

/// Finitely many weighted point masses plus a constant Lebesgue density on
/// [a, b]. The remainder functional of a quadrature rule is integration
/// against such a measure.
class Measure {
 public:
  /// Throws std::invalid_argument unless a < b, every atom lies in [a, b],
  /// all values are finite and the measure is not identically zero.
  Measure(double a, double b, std::vector<Atom> atoms, double density);

  double a() const { return a_; }
  double b() const { return b_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  double density() const { return density_; }

  std::vector<double> atom_locations() const;

 private:
  double a_;
  double b_;
  std::vector<Atom> atoms_;
  double density_;
};

/// (f(a) + f(b))/2 minus the mean of f.
Measure trapezoid_measure(double a, double b);
/// alpha f(a) + beta f((a+b)/2) + alpha f(b) minus the mean of f.
Measure simpson_measure(double a, double b, double alpha, double beta);

/// sum_i w_i f(x_i) + d * integral_a^b f. The integral is closed-form when f
/// provides one and adaptive quadrature otherwise.
double apply_functional(const Measure& mu, const SmoothFunction& f);

/// integral_a^b x^j exp(lambda x) dx, stable for small |lambda|.
cplx density_moment(double a, double b, cplx lambda, int j);

/// S(lambda) = integral exp(lambda x) dmu(x).
cplx spectral(const Measure& mu, cplx lambda);
/// S^{(j)}(lambda) = integral x^j exp(lambda x) dmu(x).
cplx spectral_derivative(const Measure& mu, cplx lambda, int j);

/// Upper bound on the sum of the magnitudes of the pieces that make up
/// S^{(j)}(lambda); the yardstick for deciding that S^{(j)} vanishes.
double spectral_term_scale(const Measure& mu, cplx lambda, int j);

/// Smallest j <= j_max with |S^{(j)}(lambda)| > tol * scale_j, where scale_j
/// is the largest spectral_term_scale over orders 0..j. Zero means lambda is
/// not a root. Throws NumericalError ("multiplicity undetermined") if every
/// derivative up to j_max vanishes at the tolerance.
int root_multiplicity(const Measure& mu, cplx lambda, double tol, int j_max);

}  // namespace quadfact
