#include "quadfact/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "quadfact/rootfind.hpp"

namespace quadfact {

namespace {

std::string describe(cplx z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

void require_in_interval(const Measure& mu, double t, const char* who) {
  if (!(t >= mu.a() && t <= mu.b())) {
    throw std::domain_error(std::string(who) + ": t outside [a, b]");
  }
}

// Checks S^{(j)}(lambda) ~ 0 for j < order.
bool vanishes_to_order(const Measure& mu, cplx lambda, int order, double tol) {
  double scale = 0.0;
  for (int j = 0; j < order; ++j) {
    scale = std::max(scale, spectral_term_scale(mu, lambda, j));
    if (std::abs(spectral_derivative(mu, lambda, j)) > tol * scale) return false;
  }
  return true;
}

}  // namespace

void validate_spectral_roots(const Measure& mu, const CharacteristicSpec& spec, double tol) {
  for (const Root& r : spec.roots()) {
    if (!vanishes_to_order(mu, r.value, r.multiplicity, tol)) {
      throw KernelConditionError("operator root " + describe(r.value) + " (multiplicity " +
                                 std::to_string(r.multiplicity) +
                                 ") is not in the kernel of the functional");
    }
  }
}

GeneralKernel::GeneralKernel(Measure mu, CharacteristicSpec spec, KernelOptions opts)
    : mu_(std::move(mu)), spec_(std::move(spec)) {
  if (opts.validate) validate_spectral_roots(mu_, spec_, opts.tol);
  omega_ = characteristic_solution(spec_);
  omega_primitive_ = omega_.antiderivative();
}

double GeneralKernel::operator()(double t) const {
  require_in_interval(mu_, t, "GeneralKernel");
  cplx sum{0.0};
  double magnitude = 0.0;
  for (const Atom& atom : mu_.atoms()) {
    if (atom.x >= t) {
      sum += atom.w * omega_(atom.x - t);
      magnitude += std::abs(atom.w) * omega_.magnitude_at(atom.x - t);
    }
  }
  if (mu_.density() != 0.0) {
    sum += mu_.density() * omega_primitive_(mu_.b() - t);
    magnitude += std::abs(mu_.density()) * omega_primitive_.magnitude_at(mu_.b() - t);
  }
  return demote_to_real(sum, 1e-11, magnitude, "kernel value");
}

double kernel_general(const Measure& mu, const CharacteristicSpec& spec, double t,
                      KernelOptions opts) {
  return GeneralKernel(mu, spec, opts)(t);
}

std::vector<cplx> zeta_exponent_roots(const ZetaParams& params) {
  params.validate();
  std::vector<cplx> out;
  if (params.gamma == 0.0) return out;
  const int d = params.n - params.k;
  const double radius = std::pow(std::abs(params.gamma), 1.0 / d);
  const double base = params.gamma > 0.0 ? 0.0 : std::numbers::pi;
  for (int j = 0; j < d; ++j) {
    const double arg = (base + 2.0 * std::numbers::pi * j) / d;
    double re = radius * std::cos(arg);
    double im = radius * std::sin(arg);
    // Snap rounding residue so that real and imaginary axis roots are exact.
    if (std::abs(re) <= 1e-15 * radius) re = 0.0;
    if (std::abs(im) <= 1e-15 * radius) im = 0.0;
    out.emplace_back(re, im);
  }
  return out;
}

CharacteristicSpec zeta_characteristic_spec(const ZetaParams& params) {
  params.validate();
  if (params.gamma == 0.0) return CharacteristicSpec({{cplx{0.0}, params.n}});
  std::vector<Root> roots;
  if (params.k > 0) roots.push_back({cplx{0.0}, params.k});
  for (const cplx& r : zeta_exponent_roots(params)) roots.push_back({r, 1});
  return CharacteristicSpec(std::move(roots));
}

ZetaKernel::ZetaKernel(Measure mu, ZetaParams params, KernelOptions opts)
    : mu_(std::move(mu)), params_(params) {
  params_.validate();
  if (!opts.validate) return;
  const int moments = params_.gamma == 0.0 ? params_.n : params_.k;
  if (!vanishes_to_order(mu_, cplx{0.0}, moments, opts.tol)) {
    throw KernelConditionError("measure does not annihilate polynomials of degree < " +
                               std::to_string(moments));
  }
  for (const cplx& r : zeta_exponent_roots(params_)) {
    if (!vanishes_to_order(mu_, r, 1, opts.tol)) {
      throw KernelConditionError("exp(" + describe(r) +
                                 " x) is not in the kernel of the functional");
    }
  }
}

double ZetaKernel::operator()(double t) const {
  require_in_interval(mu_, t, "ZetaKernel");
  double sum = 0.0;
  for (const Atom& atom : mu_.atoms()) {
    if (atom.x >= t) sum += atom.w * zeta_derivative(params_, 1, atom.x - t);
  }
  if (mu_.density() != 0.0) sum += mu_.density() * zeta(params_, mu_.b() - t);
  return sum;
}

double kernel_zeta(const Measure& mu, const ZetaParams& params, double t, KernelOptions opts) {
  return ZetaKernel(mu, params, opts)(t);
}

namespace {

void check_indices(const std::vector<int>& indices) {
  if (indices.empty()) throw std::invalid_argument("trapezoid: empty index set");
  if (indices.front() < 0) throw std::invalid_argument("trapezoid: negative index");
  for (std::size_t i = 1; i < indices.size(); ++i) {
    if (indices[i] <= indices[i - 1]) {
      throw std::invalid_argument("trapezoid: indices must be strictly increasing");
    }
  }
}

}  // namespace

std::vector<double> trapezoid_frequencies(double a, double b, const std::vector<int>& indices) {
  check_indices(indices);
  if (!(a < b)) throw std::invalid_argument("trapezoid: need a < b");
  std::vector<double> out;
  for (int n : indices) out.push_back(2.0 * tan_fixed_point(n) / (b - a));
  return out;
}

CharacteristicSpec trapezoid_spec(double a, double b, const std::vector<int>& indices) {
  const std::vector<double> lam = trapezoid_frequencies(a, b, indices);
  std::vector<Root> roots;
  for (std::size_t j = 0; j < lam.size(); ++j) {
    if (indices[j] == 0) {
      roots.push_back({cplx{0.0}, 2});
    } else {
      roots.push_back({cplx{0.0, lam[j]}, 1});
      roots.push_back({cplx{0.0, -lam[j]}, 1});
    }
  }
  return CharacteristicSpec(std::move(roots));
}

double trapezoid_kernel_multi(double a, double b, const std::vector<int>& indices, double t) {
  const std::vector<double> lam = trapezoid_frequencies(a, b, indices);
  if (!(t >= a && t <= b)) throw std::domain_error("trapezoid kernel: t outside [a, b]");
  const std::size_t k = lam.size();
  auto Q = [&lam, k](std::size_t j, double z) {
    double prod = 1.0;
    for (std::size_t l = 0; l < k; ++l) {
      if (l != j) prod *= lam[l] * lam[l] - z * z;
    }
    return prod;
  };
  double g = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    if (indices[j] == 0) {
      g += (b - t) * (t - a) / (2.0 * Q(0, 0.0) * (b - a));
      continue;
    }
    const double l = lam[j];
    g += std::sin(l * (b - t) / 2.0) * std::sin(l * (t - a) / 2.0) /
         (l * Q(j, l) * std::sin(l * (b - a) / 2.0));
  }
  return g;
}

}  // namespace quadfact
