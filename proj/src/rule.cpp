#include "quadfact/rule.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "quadfact/rootfind.hpp"

namespace quadfact {

double Rule::apply_operator(const SmoothFunction& f, double t) const {
  if (f.max_order() < order()) {
    throw OrderError(f.label() + ": rule " + label + " needs " + std::to_string(order()) +
                     " derivatives");
  }
  double sum = 0.0;
  for (int i = order(); i >= 0; --i) {
    if (op_coeffs[i] != 0.0) sum += op_coeffs[i] * f.derivative(i, t);
  }
  return sum;
}

double Rule::operator_scale(const SmoothFunction& f, double t) const {
  double sum = 0.0;
  for (int i = order(); i >= 0; --i) {
    if (op_coeffs[i] != 0.0) sum += std::abs(op_coeffs[i] * f.derivative(i, t));
  }
  return sum;
}

namespace {

std::vector<double> interior_atoms(const Measure& mu) {
  std::vector<double> out;
  for (double x : mu.atom_locations()) {
    if (x > mu.a() && x < mu.b()) out.push_back(x);
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Rule general_rule(std::string label, const Measure& mu, const CharacteristicSpec& spec,
                  KernelOptions opts) {
  auto kernel = std::make_shared<GeneralKernel>(mu, spec, opts);
  return Rule{std::move(label),
              mu,
              spec.real_coeffs(),
              [kernel](double t) { return (*kernel)(t); },
              interior_atoms(mu),
              {0.5 * (mu.a() + mu.b())}};
}

Rule trapezoid_multi_rule(double a, double b, const std::vector<int>& indices,
                          KernelPath path) {
  const CharacteristicSpec spec = trapezoid_spec(a, b, indices);
  const std::string label =
      indices.size() == 1 ? "trap:" + join(indices) : "trap-multi:" + join(indices);
  const Measure mu = trapezoid_measure(a, b);
  Rule rule = path == KernelPath::general ? general_rule(label, mu, spec)
                                          : Rule{label,
                                                 mu,
                                                 spec.real_coeffs(),
                                                 [a, b, indices](double t) {
                                                   return trapezoid_kernel_multi(a, b, indices, t);
                                                 },
                                                 {},
                                                 {}};
  // The extrema of the single-frequency kernel sit at (a+b)/2 +- k pi / lambda.
  const double m = 0.5 * (a + b);
  rule.sup_seeds = {m};
  for (double lam : trapezoid_frequencies(a, b, indices)) {
    if (lam == 0.0) continue;
    for (int k = 1; k * std::numbers::pi / lam <= 0.5 * (b - a); ++k) {
      rule.sup_seeds.push_back(m - k * std::numbers::pi / lam);
      rule.sup_seeds.push_back(m + k * std::numbers::pi / lam);
    }
  }
  return rule;
}

Rule trapezoid_rule(double a, double b, int n, KernelPath path) {
  return trapezoid_multi_rule(a, b, {n}, path);
}

Rule simpson_rule(double a, double b, const SimpsonParam& u, KernelPath path) {
  const std::string label = "simpson:" + num(u.w()) + "," + num(u.v());
  const Measure mu = simpson_u_measure(a, b, u);
  if (path == KernelPath::general) {
    Rule rule = general_rule(label, mu, simpson_spec(a, b, u));
    return rule;
  }
  const SimpsonOperator op = simpson_operator(a, b, u);
  return Rule{label,
              mu,
              {op.c0, 0.0, op.c2, 0.0, 1.0},
              [a, b, u](double t) { return simpson_kernel(a, b, u, t); },
              {0.5 * (a + b)},
              {0.5 * (a + b)}};
}

Rule classical_simpson_rule(double a, double b) {
  return general_rule("simpson-classical", simpson_measure(a, b, 1.0 / 6.0, 2.0 / 3.0),
                      CharacteristicSpec({{cplx{0.0}, 4}}));
}

Rule zeta_rule(double a, double b, const ZetaParams& params) {
  params.validate();
  auto kernel = std::make_shared<ZetaKernel>(trapezoid_measure(a, b), params);
  std::vector<double> coeffs(params.n + 1, 0.0);
  coeffs[params.n] = 1.0;
  coeffs[params.k] -= params.gamma;
  return Rule{"zeta:" + std::to_string(params.n) + "," + std::to_string(params.k) + "," +
                  num(params.gamma),
              kernel->measure(),
              std::move(coeffs),
              [kernel](double t) { return (*kernel)(t); },
              {},
              {0.5 * (a + b)}};
}

namespace {

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw std::invalid_argument("not a finite number: '" + s + "'");
  }
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::pair<std::string, std::string> split_kind(const std::string& selector) {
  const std::size_t colon = selector.find(':');
  if (colon == std::string::npos) return {selector, ""};
  return {selector.substr(0, colon), selector.substr(colon + 1)};
}

}  // namespace

Rule parse_rule_selector(const std::string& selector, double a, double b) {
  if (!(a < b)) throw std::invalid_argument("interval must satisfy a < b");
  const auto [kind, args] = split_kind(selector);
  if (kind == "simpson-classical" && args.empty()) return classical_simpson_rule(a, b);
  if (args.empty()) throw std::invalid_argument("unknown rule selector '" + selector + "'");
  const std::vector<std::string> parts = split(args, ',');
  if (kind == "trap") {
    if (parts.size() != 1) throw std::invalid_argument("trap takes one index");
    const int n = parse_int(parts[0]);
    if (n < 0) throw std::invalid_argument("trap index must be >= 0");
    return trapezoid_rule(a, b, n);
  }
  if (kind == "trap-multi") {
    std::vector<int> idx;
    for (const auto& p : parts) idx.push_back(parse_int(p));
    return trapezoid_multi_rule(a, b, idx);
  }
  if (kind == "simpson") {
    if (parts.size() != 2) throw std::invalid_argument("simpson takes w,v");
    try {
      return simpson_rule(a, b, SimpsonParam(parse_double(parts[0]), parse_double(parts[1])));
    } catch (const std::domain_error& e) {
      throw std::invalid_argument(e.what());
    }
  }
  if (kind == "zeta") {
    if (parts.size() != 3) throw std::invalid_argument("zeta takes n,k,gamma");
    const ZetaParams p{parse_int(parts[0]), parse_int(parts[1]), parse_double(parts[2])};
    try {
      return zeta_rule(a, b, p);
    } catch (const KernelConditionError& e) {
      throw std::invalid_argument(std::string("zeta rule: ") + e.what());
    }
  }
  throw std::invalid_argument("unknown rule selector '" + selector + "'");
}

SmoothFunction parse_function_selector(const std::string& selector) {
  const auto [kind, args] = split_kind(selector);
  if (args.empty()) throw std::invalid_argument("unknown function selector '" + selector + "'");
  const std::vector<std::string> parts = split(args, ',');
  if (kind == "poly") {
    std::vector<double> coeffs;
    for (const auto& p : parts) coeffs.push_back(parse_double(p));
    return polynomial(std::move(coeffs));
  }
  if (parts.size() != 1) throw std::invalid_argument(kind + " takes one parameter");
  const double beta = parse_double(parts[0]);
  if (kind == "exp") return exponential(beta);
  if (kind == "sin") return sine(beta);
  if (kind == "cos") return cosine(beta);
  throw std::invalid_argument("unknown function selector '" + selector + "'");
}

}  // namespace quadfact
