#include "quadfact/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quadfact/oracle.hpp"

namespace quadfact {

Measure::Measure(double a, double b, std::vector<Atom> atoms, double density)
    : a_(a), b_(b), atoms_(std::move(atoms)), density_(density) {
  if (!std::isfinite(a_) || !std::isfinite(b_) || !(a_ < b_)) {
    throw std::invalid_argument("Measure: interval must satisfy a < b");
  }
  if (!std::isfinite(density_)) throw std::invalid_argument("Measure: density not finite");
  bool nonzero = density_ != 0.0;
  for (const Atom& atom : atoms_) {
    if (!std::isfinite(atom.x) || !std::isfinite(atom.w)) {
      throw std::invalid_argument("Measure: atom not finite");
    }
    if (atom.x < a_ || atom.x > b_) {
      throw std::invalid_argument("Measure: atom outside [a, b]");
    }
    nonzero = nonzero || atom.w != 0.0;
  }
  if (!nonzero) throw std::invalid_argument("Measure: zero measure");
}

std::vector<double> Measure::atom_locations() const {
  std::vector<double> xs;
  xs.reserve(atoms_.size());
  for (const Atom& atom : atoms_) xs.push_back(atom.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

Measure trapezoid_measure(double a, double b) {
  return Measure(a, b, {{a, 0.5}, {b, 0.5}}, -1.0 / (b - a));
}

Measure simpson_measure(double a, double b, double alpha, double beta) {
  return Measure(a, b, {{a, alpha}, {0.5 * (a + b), beta}, {b, alpha}}, -1.0 / (b - a));
}

double apply_functional(const Measure& mu, const SmoothFunction& f) {
  if (!f.defined_on(mu.a(), mu.b())) {
    throw std::domain_error(f.label() + ": not defined on the whole measure support");
  }
  double sum = 0.0;
  for (const Atom& atom : mu.atoms()) sum += atom.w * f(atom.x);
  if (mu.density() != 0.0) {
    double integral;
    if (f.has_integral()) {
      integral = f.integral(mu.a(), mu.b());
    } else {
      integral = integrate_adaptive([&f](double x) { return f(x); }, mu.a(), mu.b(), 1e-13)
                     .value;
    }
    sum += mu.density() * integral;
  }
  return sum;
}

namespace {

// integral_{-h}^{h} s^i exp(lambda s) ds for i = 0..j.
std::vector<cplx> centered_moments(double h, cplx lambda, int j) {
  std::vector<cplx> out(j + 1);
  const double lh = std::abs(lambda) * h;
  if (lh <= 4.0) {
    // Power series in lambda; only terms with i + m even survive.
    for (int i = 0; i <= j; ++i) {
      cplx sum{0.0};
      cplx term{1.0};  // (lambda h)^m / m!
      const double hp = std::pow(h, i + 1);
      for (int m = 0; m < 400; ++m) {
        if (m > 0) term *= lambda * h / double(m);
        if ((i + m) % 2 == 0) sum += 2.0 * hp * term / double(i + m + 1);
        if (m > lh && std::abs(term) * hp <= 1e-18 * std::abs(sum)) break;
        if (term == cplx{0.0}) break;
      }
      out[i] = sum;
    }
    return out;
  }
  const cplx ep = std::exp(lambda * h);
  const cplx em = std::exp(-lambda * h);
  out[0] = (ep - em) / lambda;
  double hp = 1.0;
  for (int i = 1; i <= j; ++i) {
    hp *= h;
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    out[i] = (hp * ep - sign * hp * em) / lambda - double(i) / lambda * out[i - 1];
  }
  return out;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

cplx density_moment(double a, double b, cplx lambda, int j) {
  if (j < 0) throw std::invalid_argument("density_moment: negative order");
  if (lambda == cplx{0.0}) {
    return (std::pow(b, j + 1) - std::pow(a, j + 1)) / double(j + 1);
  }
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const std::vector<cplx> J = centered_moments(h, lambda, j);
  cplx sum{0.0};
  for (int i = 0; i <= j; ++i) sum += binomial(j, i) * std::pow(c, j - i) * J[i];
  return std::exp(lambda * c) * sum;
}

cplx spectral(const Measure& mu, cplx lambda) { return spectral_derivative(mu, lambda, 0); }

cplx spectral_derivative(const Measure& mu, cplx lambda, int j) {
  if (j < 0) throw std::invalid_argument("spectral_derivative: negative order");
  cplx sum{0.0};
  for (const Atom& atom : mu.atoms()) {
    sum += atom.w * std::pow(atom.x, j) * std::exp(lambda * atom.x);
  }
  if (mu.density() != 0.0) sum += mu.density() * density_moment(mu.a(), mu.b(), lambda, j);
  return sum;
}

double spectral_term_scale(const Measure& mu, cplx lambda, int j) {
  const double re = lambda.real();
  double scale = 0.0;
  for (const Atom& atom : mu.atoms()) {
    scale += std::abs(atom.w) * std::pow(std::abs(atom.x), j) * std::exp(re * atom.x);
  }
  scale += std::abs(mu.density()) * (mu.b() - mu.a()) *
           std::pow(std::max(std::abs(mu.a()), std::abs(mu.b())), j) *
           std::max(std::exp(re * mu.a()), std::exp(re * mu.b()));
  return scale;
}

int root_multiplicity(const Measure& mu, cplx lambda, double tol, int j_max) {
  if (!(tol > 0.0)) throw std::invalid_argument("root_multiplicity: tol must be > 0");
  if (j_max < 1) throw std::invalid_argument("root_multiplicity: j_max must be >= 1");
  double scale = 0.0;
  for (int j = 0; j <= j_max; ++j) {
    scale = std::max(scale, spectral_term_scale(mu, lambda, j));
    if (std::abs(spectral_derivative(mu, lambda, j)) > tol * scale) return j;
  }
  throw NumericalError("root_multiplicity: multiplicity undetermined up to order " +
                       std::to_string(j_max));
}

}  // namespace quadfact
