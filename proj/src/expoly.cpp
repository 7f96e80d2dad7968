#include "quadfact/expoly.hpp"

#include <algorithm>
#include <cmath>

namespace quadfact {

namespace {

bool term_less(const ExpTerm& x, const ExpTerm& y) {
  if (x.lambda.real() != y.lambda.real()) return x.lambda.real() < y.lambda.real();
  if (x.lambda.imag() != y.lambda.imag()) return x.lambda.imag() < y.lambda.imag();
  return x.power < y.power;
}

bool same_slot(const ExpTerm& x, const ExpTerm& y) {
  return x.lambda == y.lambda && x.power == y.power;
}

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

cplx ipow(cplx x, int n) {
  cplx r{1.0};
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ExpPolynomial::ExpPolynomial(std::vector<ExpTerm> terms) : terms_(std::move(terms)) {
  for (const ExpTerm& t : terms_) {
    if (t.power < 0) throw std::invalid_argument("ExpPolynomial: negative power");
  }
  canonicalize();
}

ExpPolynomial ExpPolynomial::term(cplx lambda, int power, cplx coeff) {
  return ExpPolynomial({ExpTerm{lambda, power, coeff}});
}

void ExpPolynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_less);
  std::vector<ExpTerm> merged;
  merged.reserve(terms_.size());
  for (const ExpTerm& t : terms_) {
    if (!merged.empty() && same_slot(merged.back(), t)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const ExpTerm& t) { return t.coeff == cplx{0.0}; });
  terms_ = std::move(merged);
}

cplx ExpPolynomial::operator()(double t) const {
  cplx sum{0.0};
  for (const ExpTerm& term : terms_) {
    sum += term.coeff * ipow(t, term.power) * std::exp(term.lambda * t);
  }
  return sum;
}

cplx ExpPolynomial::derivative_at(int order, double t) const {
  if (order < 0) throw std::invalid_argument("derivative_at: negative order");
  cplx sum{0.0};
  for (const ExpTerm& term : terms_) {
    // Leibniz: (t^p e^{lt})^{(j)} = sum_i C(j,i) p!/(p-i)! t^{p-i} l^{j-i} e^{lt}
    cplx inner{0.0};
    double falling = 1.0;
    for (int i = 0; i <= std::min(order, term.power); ++i) {
      if (i > 0) falling *= term.power - i + 1;
      inner += binomial(order, i) * falling * ipow(t, term.power - i) *
               ipow(term.lambda, order - i);
    }
    sum += term.coeff * inner * std::exp(term.lambda * t);
  }
  return sum;
}

double ExpPolynomial::magnitude_at(double t) const {
  double sum = 0.0;
  for (const ExpTerm& term : terms_) {
    sum += std::abs(term.coeff) * std::abs(ipow(t, term.power)) *
           std::exp(term.lambda.real() * t);
  }
  return sum;
}

ExpPolynomial ExpPolynomial::derivative() const {
  std::vector<ExpTerm> out;
  out.reserve(2 * terms_.size());
  for (const ExpTerm& term : terms_) {
    if (term.power > 0) {
      out.push_back({term.lambda, term.power - 1, term.coeff * double(term.power)});
    }
    if (term.lambda != cplx{0.0}) {
      out.push_back({term.lambda, term.power, term.coeff * term.lambda});
    }
  }
  return ExpPolynomial(std::move(out));
}

ExpPolynomial ExpPolynomial::antiderivative() const {
  std::vector<ExpTerm> out;
  cplx constant{0.0};
  for (const ExpTerm& term : terms_) {
    const int p = term.power;
    if (term.lambda == cplx{0.0}) {
      out.push_back({term.lambda, p + 1, term.coeff / double(p + 1)});
      continue;
    }
    // int t^p e^{lt} dt = e^{lt} sum_{i=0}^{p} (-1)^{p-i} p!/i! t^i / l^{p-i+1}
    double ratio = 1.0;  // p!/i!, built downwards from i = p
    for (int i = p; i >= 0; --i) {
      if (i < p) ratio *= i + 1;
      const double sign = ((p - i) % 2 == 0) ? 1.0 : -1.0;
      out.push_back(
          {term.lambda, i, term.coeff * sign * ratio / ipow(term.lambda, p - i + 1)});
    }
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    constant -= term.coeff * sign * ratio / ipow(term.lambda, p + 1);
  }
  if (constant != cplx{0.0}) out.push_back({cplx{0.0}, 0, constant});
  return ExpPolynomial(std::move(out));
}

ExpPolynomial ExpPolynomial::shifted(double s) const {
  std::vector<ExpTerm> out;
  for (const ExpTerm& term : terms_) {
    const cplx factor = term.coeff * std::exp(-term.lambda * s);
    for (int i = 0; i <= term.power; ++i) {
      out.push_back({term.lambda, i,
                     factor * binomial(term.power, i) * ipow(-s, term.power - i)});
    }
  }
  return ExpPolynomial(std::move(out));
}

double ExpPolynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const ExpTerm& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

ExpPolynomial& ExpPolynomial::operator+=(const ExpPolynomial& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

ExpPolynomial& ExpPolynomial::operator*=(cplx scale) {
  for (ExpTerm& t : terms_) t.coeff *= scale;
  canonicalize();
  return *this;
}

}  // namespace quadfact
