#include "quadfact/charode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quadfact/oracle.hpp"

namespace quadfact {

namespace {

// Coefficients (lowest degree first) of prod (z + shift_l)^{m_l}.
std::vector<cplx> expand(const std::vector<std::pair<cplx, int>>& factors) {
  std::vector<cplx> poly{cplx{1.0}};
  for (const auto& [shift, mult] : factors) {
    for (int r = 0; r < mult; ++r) {
      std::vector<cplx> next(poly.size() + 1, cplx{0.0});
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += shift * poly[i];
        next[i + 1] += poly[i];
      }
      poly = std::move(next);
    }
  }
  return poly;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

CharacteristicSpec::CharacteristicSpec(std::vector<Root> roots) : roots_(std::move(roots)) {
  if (roots_.empty()) throw std::invalid_argument("CharacteristicSpec: no roots");
  double max_abs = 0.0;
  for (const Root& r : roots_) {
    if (r.multiplicity < 1) {
      throw std::invalid_argument("CharacteristicSpec: multiplicity must be positive");
    }
    if (!std::isfinite(r.value.real()) || !std::isfinite(r.value.imag())) {
      throw std::invalid_argument("CharacteristicSpec: root not finite");
    }
    max_abs = std::max(max_abs, std::abs(r.value));
  }
  const double sep = 1e-9 * (1.0 + max_abs);
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    for (std::size_t l = i + 1; l < roots_.size(); ++l) {
      if (std::abs(roots_[i].value - roots_[l].value) < sep) {
        throw std::invalid_argument(
            "CharacteristicSpec: coincident roots; merge them into one root of higher "
            "multiplicity");
      }
    }
  }

  std::vector<std::pair<cplx, int>> factors;
  for (const Root& r : roots_) factors.emplace_back(-r.value, r.multiplicity);
  coeffs_ = expand(factors);
  coeffs_.back() = cplx{1.0};

  const double conj_tol = 1e-12 * (1.0 + max_abs);
  conjugate_closed_ = std::all_of(roots_.begin(), roots_.end(), [&](const Root& r) {
    return std::any_of(roots_.begin(), roots_.end(), [&](const Root& s) {
      return s.multiplicity == r.multiplicity &&
             std::abs(s.value - std::conj(r.value)) <= conj_tol;
    });
  });
  if (conjugate_closed_) {
    for (cplx& c : coeffs_) c = cplx{c.real(), 0.0};
  }
  double scale = 0.0;
  for (const cplx& c : coeffs_) scale = std::max(scale, std::abs(c));
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [scale](const cplx& c) {
        return std::abs(c.imag()) <= 1e-12 * std::max(1.0, scale);
      })) {
    for (const cplx& c : coeffs_) real_coeffs_.push_back(c.real());
  }
}

const std::vector<double>& CharacteristicSpec::real_coeffs() const {
  if (real_coeffs_.empty()) {
    throw NumericalError("CharacteristicSpec: coefficients are not real");
  }
  return real_coeffs_;
}

CharacteristicSpec coeffs_from_roots(std::vector<Root> roots) {
  return CharacteristicSpec(std::move(roots));
}

ExpPolynomial characteristic_solution(const CharacteristicSpec& spec) {
  const auto& roots = spec.roots();
  std::vector<ExpTerm> terms;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const cplx li = roots[i].value;
    const int mi = roots[i].multiplicity;

    // Taylor coefficients p_r of P_i at lambda_i.
    std::vector<std::pair<cplx, int>> factors;
    for (std::size_t l = 0; l < roots.size(); ++l) {
      if (l != i) factors.emplace_back(li - roots[l].value, roots[l].multiplicity);
    }
    const std::vector<cplx> p = expand(factors);
    if (std::abs(p[0]) < 1e-300) {
      throw NumericalError("characteristic_solution: near-coincident roots");
    }

    // Taylor coefficients of 1/P_i from (h P_i)^{(k)} = 0, k >= 1.
    std::vector<cplx> h(mi);
    h[0] = 1.0 / p[0];
    for (int k = 1; k < mi; ++k) {
      cplx acc{0.0};
      for (int r = 1; r <= k && r < static_cast<int>(p.size()); ++r) acc += p[r] * h[k - r];
      h[k] = -acc / p[0];
    }
    for (int j = 0; j < mi; ++j) {
      terms.push_back({li, j, h[mi - 1 - j] / factorial(j)});
    }
  }
  return ExpPolynomial(std::move(terms));
}

double apply_dc(const CharacteristicSpec& spec, const SmoothFunction& f, double t) {
  const int n = spec.order();
  if (f.max_order() < n) {
    throw OrderError(f.label() + ": operator of order " + std::to_string(n) +
                     " needs that many derivatives");
  }
  const std::vector<double>& c = spec.real_coeffs();
  double sum = 0.0;
  for (int i = n; i >= 0; --i) {
    if (c[i] != 0.0) sum += c[i] * f.derivative(i, t);
  }
  return sum;
}

ExpPolynomial apply_dc(const CharacteristicSpec& spec, const ExpPolynomial& p) {
  ExpPolynomial out;
  ExpPolynomial d = p;
  for (const cplx& c : spec.coeffs()) {
    out += c * d;
    d = d.derivative();
  }
  return out;
}

double taylor_polynomial_part(const CharacteristicSpec& spec, const SmoothFunction& f,
                              double a, double x) {
  const int n = spec.order();
  if (f.max_order() < n) {
    throw OrderError(f.label() + ": Taylor expansion of order " + std::to_string(n) +
                     " needs that many derivatives");
  }
  const std::vector<double>& c = spec.real_coeffs();
  const ExpPolynomial omega = characteristic_solution(spec);
  const double s = x - a;

  std::vector<double> omega_d(n);
  for (int i = 0; i < n; ++i) {
    const cplx v = omega.derivative_at(i, s);
    omega_d[i] = demote_to_real(v, 1e-10, omega.magnitude_at(s), "characteristic solution");
  }
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    double inner = 0.0;
    for (int i = 0; i + j < n; ++i) inner += c[i + j + 1] * omega_d[i];
    sum += f.derivative(j, a) * inner;
  }
  return sum;
}

TaylorSplit taylor_expansion(const CharacteristicSpec& spec, const SmoothFunction& f,
                             double a, double x, double tol) {
  TaylorSplit out;
  out.polynomial_part = taylor_polynomial_part(spec, f, a, x);
  const ExpPolynomial omega = characteristic_solution(spec);
  const std::vector<double>& c = spec.real_coeffs();
  auto integrand = [&](double t) {
    double dc = 0.0;
    for (int i = spec.order(); i >= 0; --i) {
      if (c[i] != 0.0) dc += c[i] * f.derivative(i, t);
    }
    return dc * omega(x - t).real();
  };
  out.remainder_integral = integrate_adaptive(integrand, a, x, tol).value;
  return out;
}

}  // namespace quadfact
