#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "quadfact/bounds.hpp"
#include "quadfact/charode.hpp"
#include "quadfact/json_io.hpp"
#include "quadfact/rootfind.hpp"
#include "quadfact/rule.hpp"
#include "quadfact/verify.hpp"
#include "quadfact/zeta.hpp"

namespace quadfact::cli {

namespace {

constexpr double kDefaultTol = 1e-9;

struct Config {
  std::string rule;
  std::string function;
  std::string interval = "0,1";
  std::string p = "inf";
  std::string format = "csv";
  std::string output;
  int points = 101;
  int tau_max = 10;
  int zeta_n = 2;
  int zeta_k = 0;
  double zeta_gamma = 0.0;
  int order = 0;
  std::vector<double> ts;
  std::vector<std::string> roots;
};

double parse_number(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw std::invalid_argument("not a finite number: '" + text + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (!text.empty() && text.back() == ',') throw std::invalid_argument("trailing comma in '" + text + "'");
  return out;
}

std::pair<double, double> parse_interval(const std::string& text) {
  const std::vector<double> v = parse_list(text);
  if (v.size() != 2) throw std::invalid_argument("interval must be a,b");
  if (!(v[0] < v[1])) throw std::invalid_argument("interval must satisfy a < b");
  return {v[0], v[1]};
}

Root parse_root(const std::string& text) {
  const std::vector<double> v = parse_list(text);
  if (v.size() != 3) throw std::invalid_argument("root must be re,im,m");
  const double m = v[2];
  if (m < 1 || m != std::floor(m) || m > 64) {
    throw std::invalid_argument("root multiplicity must be a positive integer");
  }
  return {cplx{v[0], v[1]}, static_cast<int>(m)};
}

double verification_tol() {
  const char* env = std::getenv("QUADFACT_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  const double tol = parse_number(env);
  if (!(tol > 0.0)) throw std::invalid_argument("QUADFACT_TOL must be positive");
  return tol;
}

// The built-in function set swept by `verify`.
std::vector<SmoothFunction> builtin_functions() {
  std::vector<SmoothFunction> fs;
  for (int m = 0; m <= 6; ++m) fs.push_back(monomial(m));
  fs.push_back(exponential(1.0));
  fs.push_back(exponential(-1.0));
  fs.push_back(sine(1.0));
  fs.push_back(cosine(1.0));
  return fs;
}

int cmd_bound(const Config& c, std::ostream& out) {
  const auto [a, b] = parse_interval(c.interval);
  const Exponent p = parse_exponent(c.p);
  const SmoothFunction f = parse_function_selector(c.function);
  BoundReport r;
  if (c.rule == "simpson-classical" && p != Exponent::two) {
    r = classical_simpson_report(a, b, f, p);
  } else {
    r = holder_bound(parse_rule_selector(c.rule, a, b), f, p);
  }
  if (c.format == "json") {
    out << bound_report_to_json(r).dump() << '\n';
  } else {
    out << bound_csv_header() << '\n' << to_csv_row(r) << '\n';
  }
  return r.holds ? kExitOk : kExitViolation;
}

int cmd_kernel(const Config& c, std::ostream& out) {
  const auto [a, b] = parse_interval(c.interval);
  if (c.points < 2) throw std::invalid_argument("--points must be at least 2");
  const Rule rule = parse_rule_selector(c.rule, a, b);
  out << "t,g\n";
  for (int i = 0; i < c.points; ++i) {
    const double t = i == c.points - 1 ? b : a + (b - a) * i / (c.points - 1);
    out << format_number(t) << ',' << format_number(rule.kernel(t)) << '\n';
  }
  return kExitOk;
}

int cmd_tau(const Config& c, std::ostream& out) {
  if (c.tau_max < 0) throw std::invalid_argument("--max must be >= 0");
  out << "n,tau_n,residual\n";
  for (int n = 0; n <= c.tau_max; ++n) {
    const double tau = tan_fixed_point(n);
    out << n << ',' << format_number(tau) << ',' << format_number(std::abs(std::tan(tau) - tau))
        << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const auto [a, b] = parse_interval(c.interval);
  const double tol = verification_tol();
  const Rule rule = parse_rule_selector(c.rule, a, b);
  std::vector<SmoothFunction> fs;
  if (c.function.empty()) {
    fs = builtin_functions();
  } else {
    fs.push_back(parse_function_selector(c.function));
  }
  bool all_pass = true;
  if (c.format == "csv") out << "rule,f,lhs,rhs,abs_err,pass\n";
  for (const SmoothFunction& f : fs) {
    const VerificationRecord rec = verify_factorization(rule, f, tol);
    all_pass = all_pass && rec.pass;
    if (c.format == "csv") {
      out << '"' << rec.rule << "\"," << rec.function << ',' << format_number(rec.lhs) << ','
          << format_number(rec.rhs) << ',' << format_number(rec.abs_err) << ','
          << (rec.pass ? "true" : "false") << '\n';
    } else {
      out << to_json_line(rec) << '\n';
    }
  }
  return all_pass ? kExitOk : kExitViolation;
}

std::vector<double> sample_points(const Config& c) {
  if (!c.ts.empty()) return c.ts;
  const auto [a, b] = parse_interval(c.interval);
  if (c.points < 2) throw std::invalid_argument("--points must be at least 2");
  std::vector<double> ts;
  for (int i = 0; i < c.points; ++i) ts.push_back(i == c.points - 1 ? b : a + (b - a) * i / (c.points - 1));
  return ts;
}

int cmd_zeta(const Config& c, std::ostream& out) {
  const ZetaParams p{c.zeta_n, c.zeta_k, c.zeta_gamma};
  p.validate();
  out << "t,zeta\n";
  for (double t : sample_points(c)) {
    out << format_number(t) << ',' << format_number(zeta_derivative(p, c.order, t)) << '\n';
  }
  return kExitOk;
}

int cmd_omega(const Config& c, std::ostream& out) {
  if (c.roots.empty()) throw std::invalid_argument("omega needs at least one --root re,im,m");
  if (c.order < 0) throw std::invalid_argument("--order must be >= 0");
  std::vector<Root> roots;
  for (const auto& r : c.roots) roots.push_back(parse_root(r));
  const ExpPolynomial omega = characteristic_solution(CharacteristicSpec(std::move(roots)));
  out << "t,re,im\n";
  for (double t : sample_points(c)) {
    const cplx v = omega.derivative_at(c.order, t);
    out << format_number(t) << ',' << format_number(v.real()) << ',' << format_number(v.imag())
        << '\n';
  }
  return kExitOk;
}

void add_output_flags(CLI::App* sub, Config& c) {
  sub->add_option("--output,-o", c.output, "Write to this file instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Kernel factorization of quadrature remainders and Hoelder-type error bounds",
               "quadfact"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"csv", "json"});

  CLI::App* bound = app.add_subcommand("bound", "Hoelder bound report for one rule and function");
  bound->add_option("--rule", c.rule, "trap:n | trap-multi:n1,n2,.. | simpson:w,v | simpson-classical | zeta:n,k,gamma")
      ->required();
  bound->add_option("--f", c.function, "poly:c0,c1,.. | exp:beta | sin:beta | cos:beta")->required();
  bound->add_option("--interval", c.interval, "a,b");
  bound->add_option("--p", c.p, "Exponent on D f: 1, 2 or inf");
  bound->add_option("--format", c.format)->check(formats);
  add_output_flags(bound, c);

  CLI::App* kernel = app.add_subcommand("kernel", "Dump the kernel g as t,g CSV");
  kernel->add_option("--rule", c.rule)->required();
  kernel->add_option("--interval", c.interval, "a,b");
  kernel->add_option("--points", c.points, "Number of equispaced samples");
  add_output_flags(kernel, c);

  CLI::App* tau = app.add_subcommand("tau", "Table of the fixed points of tan");
  tau->add_option("--max", c.tau_max, "Largest index n");
  add_output_flags(tau, c);

  CLI::App* verify = app.add_subcommand("verify", "Check the factorization identity");
  verify->add_option("--rule", c.rule)->required();
  verify->add_option("--f", c.function, "Single function; default is the built-in set");
  verify->add_option("--interval", c.interval, "a,b");
  verify->add_option("--format", c.format)->check(formats);
  add_output_flags(verify, c);

  CLI::App* zeta_cmd = app.add_subcommand("zeta", "Evaluate zeta_{n,k,gamma} or a derivative");
  zeta_cmd->add_option("--n", c.zeta_n);
  zeta_cmd->add_option("--k", c.zeta_k);
  zeta_cmd->add_option("--gamma", c.zeta_gamma);
  zeta_cmd->add_option("--order", c.order, "Derivative order, at most n");
  zeta_cmd->add_option("--t", c.ts, "Sample points")->delimiter(',');
  zeta_cmd->add_option("--interval", c.interval, "a,b (used without --t)");
  zeta_cmd->add_option("--points", c.points);
  add_output_flags(zeta_cmd, c);

  CLI::App* omega = app.add_subcommand("omega", "Evaluate the characteristic solution");
  omega->add_option("--root", c.roots, "re,im,m (repeatable)")->required();
  omega->add_option("--order", c.order, "Derivative order");
  omega->add_option("--t", c.ts, "Sample points")->delimiter(',');
  omega->add_option("--interval", c.interval, "a,b (used without --t)");
  omega->add_option("--points", c.points);
  add_output_flags(omega, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (bound->parsed()) code = cmd_bound(c, buffer);
    else if (kernel->parsed()) code = cmd_kernel(c, buffer);
    else if (tau->parsed()) code = cmd_tau(c, buffer);
    else if (verify->parsed()) code = cmd_verify(c, buffer);
    else if (zeta_cmd->parsed()) code = cmd_zeta(c, buffer);
    else if (omega->parsed()) code = cmd_omega(c, buffer);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const KernelConditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitViolation;
  }

  if (c.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << c.output << "' for writing\n";
      return kExitInput;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace quadfact::cli
