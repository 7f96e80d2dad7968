#include "quadfact/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "quadfact/oracle.hpp"
#include "quadfact/rootfind.hpp"

namespace quadfact {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kScanIntervals = 2048;  // 2049 points per piece
constexpr int kSignGrid = 512;        // 513 points

std::vector<double> piece_cuts(double a, double b, std::span<const double> breakpoints) {
  if (!(a < b)) throw std::invalid_argument("norm: need a < b");
  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

double grid_point(double lo, double hi, int i, int n) {
  return i == n ? hi : lo + (hi - lo) * i / n;
}

// Maximizes f on [l, r] by golden-section search; returns the best abscissa.
double golden_max(const RealFunction& f, double l, double r, double width) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = r - inv_phi * (r - l);
  double x2 = l + inv_phi * (r - l);
  double f1 = f(x1);
  double f2 = f(x2);
  while (r - l > width) {
    if (f1 < f2) {
      l = x1;
      x1 = x2;
      f1 = f2;
      x2 = l + inv_phi * (r - l);
      f2 = f(x2);
    } else {
      r = x2;
      x2 = x1;
      f2 = f1;
      x1 = r - inv_phi * (r - l);
      f1 = f(x1);
    }
    if (!(x1 < x2)) break;
  }
  return f1 >= f2 ? x1 : x2;
}

}  // namespace

Exponent conjugate(Exponent p) {
  switch (p) {
    case Exponent::one: return Exponent::infinity;
    case Exponent::two: return Exponent::two;
    case Exponent::infinity: return Exponent::one;
  }
  throw std::logic_error("conjugate: bad exponent");
}

std::string to_string(Exponent p) {
  switch (p) {
    case Exponent::one: return "1";
    case Exponent::two: return "2";
    case Exponent::infinity: return "inf";
  }
  throw std::logic_error("to_string: bad exponent");
}

Exponent parse_exponent(const std::string& text) {
  if (text == "1") return Exponent::one;
  if (text == "2") return Exponent::two;
  if (text == "inf" || text == "infinity" || text == "Inf") return Exponent::infinity;
  throw std::invalid_argument("exponent must be 1, 2 or inf, got '" + text + "'");
}

SupResult sup_norm(const RealFunction& h, double a, double b,
                   std::span<const double> breakpoints, std::span<const double> seeds) {
  const std::vector<double> cuts = piece_cuts(a, b, breakpoints);
  const RealFunction abs_h = [&h](double t) { return std::abs(h(t)); };
  SupResult best{-1.0, a};
  auto consider = [&best](double t, double v) {
    if (v > best.value) best = {v, t};
  };

  for (std::size_t piece = 0; piece + 1 < cuts.size(); ++piece) {
    const double lo = cuts[piece];
    const double hi = cuts[piece + 1];
    const int n = kScanIntervals;
    const double spacing = (hi - lo) / n;
    std::vector<double> vals(n + 1);
    for (int i = 0; i <= n; ++i) {
      vals[i] = abs_h(grid_point(lo, hi, i, n));
      consider(grid_point(lo, hi, i, n), vals[i]);
    }

    std::vector<int> candidates;
    for (int i = 0; i <= n; ++i) {
      const double left = i > 0 ? vals[i - 1] : -1.0;
      const double right = i < n ? vals[i + 1] : -1.0;
      if (vals[i] >= left && vals[i] >= right) candidates.push_back(i);
    }
    for (double s : seeds) {
      if (s >= lo && s <= hi) {
        candidates.push_back(static_cast<int>(std::lround((s - lo) / spacing)));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    constexpr std::size_t kMaxCandidates = 64;
    if (candidates.size() > kMaxCandidates) {
      std::stable_sort(candidates.begin(), candidates.end(),
                       [&vals](int x, int y) { return vals[x] > vals[y]; });
      candidates.resize(kMaxCandidates);
    }

    const double arg_tol = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    const double delta = spacing / 4.0;
    // Fourth-order central difference of |h|.
    auto slope = [&abs_h, delta](double t) {
      return (abs_h(t - 2 * delta) - 8 * abs_h(t - delta) + 8 * abs_h(t + delta) -
              abs_h(t + 2 * delta)) /
             (12 * delta);
    };
    for (int c : candidates) {
      const double l = grid_point(lo, hi, std::max(c - 1, 0), n);
      const double r = grid_point(lo, hi, std::min(c + 1, n), n);
      double t_star = golden_max(abs_h, l, r, arg_tol);
      double v_star = abs_h(t_star);
      if (vals[c] > v_star) {
        t_star = grid_point(lo, hi, c, n);
        v_star = vals[c];
      }

      // Near a piece end, a golden-section point can beat the end value
      // only by rounding noise; the end itself is then the maximizer. Kernels
      // are flat at such ends and carry a few ulps of noise, hence 64 eps.
      bool snapped = false;
      for (double e : {lo, hi}) {
        if (snapped || std::abs(t_star - e) >= spacing) continue;
        const double v_end = abs_h(e);
        if (v_end >= v_star * (1.0 - 64 * kEps)) {
          v_star = std::max(v_star, v_end);
          t_star = e;
          snapped = true;
        }
      }

      // Golden section only resolves a smooth maximum to about sqrt(eps);
      // the sign change of the slope pins it down much further.
      const double pl = std::max(t_star - spacing, lo + 2 * delta);
      const double pr = std::min(t_star + spacing, hi - 2 * delta);
      if (!snapped && pl < pr && slope(pl) > 0.0 && slope(pr) < 0.0) {
        const double tp = bisect({slope, pl, pr, 4 * kEps * std::max(std::abs(pl), std::abs(pr))});
        const double vp = abs_h(tp);
        if (vp >= v_star * (1.0 - 4 * kEps)) {
          v_star = std::max(v_star, vp);
          t_star = tp;
        }
      }
      consider(t_star, v_star);
    }
  }
  return best;
}

double norm_on_interval(const RealFunction& h, double a, double b, Exponent q,
                        std::span<const double> breakpoints, std::span<const double> seeds) {
  if (q == Exponent::infinity) return sup_norm(h, a, b, breakpoints, seeds).value;

  std::vector<double> cuts = piece_cuts(a, b, breakpoints);
  std::vector<double> zeros;
  for (std::size_t piece = 0; piece + 1 < cuts.size(); ++piece) {
    const double lo = cuts[piece];
    const double hi = cuts[piece + 1];
    double prev_t = lo;
    double prev_v = h(lo);
    for (int i = 1; i <= kScanIntervals; ++i) {
      const double t = grid_point(lo, hi, i, kScanIntervals);
      const double v = h(t);
      if (v == 0.0) {
        zeros.push_back(t);
      } else if (prev_v != 0.0 && std::signbit(v) != std::signbit(prev_v)) {
        zeros.push_back(bisect({h, prev_t, t, 4 * kEps * std::max(std::abs(prev_t), std::abs(t))}));
      }
      prev_t = t;
      prev_v = v;
    }
  }
  cuts.insert(cuts.end(), zeros.begin(), zeros.end());

  const bool square = q == Exponent::two;
  const RealFunction integrand = [&h, square](double t) {
    const double v = h(t);
    return square ? v * v : std::abs(v);
  };
  const double integral = integrate_adaptive(integrand, a, b, 1e-11, cuts, 0.0).value;
  return square ? std::sqrt(integral) : integral;
}

namespace {

struct DerivativeSample {
  double max_abs = 0.0;
  double max_scale = 0.0;
  bool vanishes() const { return max_abs <= 1e-13 * max_scale; }
};

DerivativeSample sample_operator(const Rule& rule, const SmoothFunction& f) {
  DerivativeSample s;
  for (int i = 0; i <= kSignGrid; ++i) {
    const double t = grid_point(rule.a(), rule.b(), i, kSignGrid);
    s.max_abs = std::max(s.max_abs, std::abs(rule.apply_operator(f, t)));
    s.max_scale = std::max(s.max_scale, rule.operator_scale(f, t));
  }
  return s;
}

double functional_roundoff(const Measure& mu, const SmoothFunction& f) {
  double size = 0.0;
  for (const Atom& atom : mu.atoms()) size += std::abs(atom.w * f(atom.x));
  if (mu.density() != 0.0) {
    double fmax = 0.0;
    for (int i = 0; i <= kSignGrid; ++i) {
      fmax = std::max(fmax, std::abs(f(grid_point(mu.a(), mu.b(), i, kSignGrid))));
    }
    size += std::abs(mu.density()) * (mu.b() - mu.a()) * fmax;
  }
  return 16.0 * kEps * size;
}

void finish(BoundReport& r) {
  r.bound = r.derivative_norm == 0.0 ? 0.0 : r.derivative_norm * r.kernel_norm;
  r.holds = std::abs(r.functional_value) <= r.bound * (1.0 + 1e-10) + r.value_roundoff;
}

}  // namespace

BoundReport holder_bound(const Rule& rule, const SmoothFunction& f, Exponent p) {
  if (f.max_order() < rule.order()) {
    throw OrderError(f.label() + ": rule " + rule.label + " needs " +
                     std::to_string(rule.order()) + " derivatives");
  }
  BoundReport r;
  r.rule = rule.label;
  r.function = f.label();
  r.p = p;
  r.q = conjugate(p);
  r.functional_value = apply_functional(rule.measure, f);
  r.value_roundoff = functional_roundoff(rule.measure, f);
  if (!sample_operator(rule, f).vanishes()) {
    r.derivative_norm = norm_on_interval(
        [&rule, &f](double t) { return rule.apply_operator(f, t); }, rule.a(), rule.b(), p);
  }
  r.kernel_norm = norm_on_interval(rule.kernel, rule.a(), rule.b(), r.q, rule.breakpoints,
                                   rule.sup_seeds);
  finish(r);
  return r;
}

BoundReport holder_bound(const Measure& mu, const CharacteristicSpec& spec,
                         const SmoothFunction& f, Exponent p) {
  return holder_bound(general_rule("measure", mu, spec), f, p);
}

std::string to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::nonnegative: return "nonnegative";
    case SignVerdict::nonpositive: return "nonpositive";
    case SignVerdict::inconclusive: return "inconclusive";
  }
  throw std::logic_error("to_string: bad verdict");
}

SignCheck sign_inequality_check(const Rule& rule, const SmoothFunction& f) {
  std::vector<double> gs(kSignGrid + 1);
  std::vector<double> ds(kSignGrid + 1);
  double g_max = 0.0;
  double d_max = 0.0;
  double d_scale = 0.0;
  for (int i = 0; i <= kSignGrid; ++i) {
    const double t = grid_point(rule.a(), rule.b(), i, kSignGrid);
    gs[i] = rule.kernel(t);
    ds[i] = rule.apply_operator(f, t);
    g_max = std::max(g_max, std::abs(gs[i]));
    d_max = std::max(d_max, std::abs(ds[i]));
    d_scale = std::max(d_scale, rule.operator_scale(f, t));
  }
  // +1, -1, or 0 for mixed signs.
  auto sign_of = [](const std::vector<double>& xs, double slack) {
    const bool nonneg = std::all_of(xs.begin(), xs.end(), [slack](double x) { return x >= -slack; });
    const bool nonpos = std::all_of(xs.begin(), xs.end(), [slack](double x) { return x <= slack; });
    return nonneg ? 1 : (nonpos ? -1 : 0);
  };

  SignCheck out;
  out.functional_value = apply_functional(rule.measure, f);
  const int g_sign = sign_of(gs, 1e-12 * g_max);
  const int d_sign = d_max <= 1e-13 * d_scale ? 1 : sign_of(ds, 1e-12 * d_max);
  if (g_sign == 0 || d_sign == 0) {
    out.verdict = SignVerdict::inconclusive;
    out.consistent = true;
  } else if (g_sign == d_sign) {
    out.verdict = SignVerdict::nonnegative;
    out.consistent = out.functional_value >= -1e-12;
  } else {
    out.verdict = SignVerdict::nonpositive;
    out.consistent = out.functional_value <= 1e-12;
  }
  return out;
}

SignCheck sign_inequality_check(const Measure& mu, const CharacteristicSpec& spec,
                                const SmoothFunction& f) {
  return sign_inequality_check(general_rule("measure", mu, spec), f);
}

KernelNormConstants trapezoid_bound_constants(double a, double b, int n) {
  if (!(a < b)) throw std::invalid_argument("trapezoid_bound_constants: need a < b");
  if (n < 0) throw std::invalid_argument("trapezoid_bound_constants: n must be >= 0");
  const double h = b - a;
  if (n == 0) return {h * h / 12.0, h / 8.0};
  const double tau = tan_fixed_point(n);
  return {(n + 1.0) * n * std::numbers::pi / (2.0 * tau * tau * tau) * h * h,
          (1.0 + std::abs(std::cos(tau))) / (4.0 * tau * std::abs(std::sin(tau))) * h};
}

KernelNormConstants simpson_bound_constants(double a, double b, const SimpsonParam& u) {
  if (!(a < b)) throw std::invalid_argument("simpson_bound_constants: need a < b");
  // g_u >= 0, so its L1 norm is its integral.
  return {simpson_kernel_integral(a, b, u), simpson_kernel_peak(a, b, u)};
}

BoundReport classical_simpson_report(double a, double b, const SmoothFunction& f, Exponent p) {
  if (p == Exponent::two) {
    throw std::invalid_argument("classical_simpson_report: p must be 1 or inf");
  }
  if (!(a < b)) throw std::invalid_argument("classical_simpson_report: need a < b");
  if (f.max_order() < 4) throw OrderError(f.label() + ": Simpson bound needs f''''");
  const Measure mu = simpson_measure(a, b, 1.0 / 6.0, 2.0 / 3.0);
  const double h = b - a;
  BoundReport r;
  r.rule = "simpson-classical";
  r.function = f.label();
  r.p = p;
  r.q = conjugate(p);
  r.functional_value = apply_functional(mu, f);
  r.value_roundoff = functional_roundoff(mu, f);
  r.kernel_norm = p == Exponent::one ? h * h * h / 1152.0 : h * h * h * h / 2880.0;
  double fourth_max = 0.0;
  double fourth_scale = 0.0;
  for (int i = 0; i <= kSignGrid; ++i) {
    const double t = grid_point(a, b, i, kSignGrid);
    fourth_max = std::max(fourth_max, std::abs(f.derivative(4, t)));
  }
  fourth_scale = fourth_max;
  if (fourth_scale > 0.0) {
    r.derivative_norm =
        norm_on_interval([&f](double t) { return f.derivative(4, t); }, a, b, p);
  }
  finish(r);
  return r;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string bound_csv_header() { return "rule,p,q,value,deriv_norm,kernel_norm,bound,holds"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv_row(const BoundReport& r) {
  return csv_field(r.rule) + "," + to_string(r.p) + "," + to_string(r.q) + "," +
         format_number(r.functional_value) + "," + format_number(r.derivative_norm) + "," +
         format_number(r.kernel_norm) + "," + format_number(r.bound) + "," +
         (r.holds ? "true" : "false");
}

}  // namespace quadfact
