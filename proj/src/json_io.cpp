#include "quadfact/json_io.hpp"

#include <stdexcept>
#include <vector>

namespace quadfact {

namespace {

double number_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    throw std::invalid_argument(std::string("json: missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

}  // namespace

json measure_to_json(const Measure& mu) {
  json atoms = json::array();
  for (const Atom& atom : mu.atoms()) atoms.push_back({{"x", atom.x}, {"w", atom.w}});
  return {{"a", mu.a()}, {"b", mu.b()}, {"atoms", atoms}, {"density", mu.density()}};
}

Measure measure_from_json(const json& j) {
  std::vector<Atom> atoms;
  if (j.contains("atoms")) {
    if (!j.at("atoms").is_array()) throw std::invalid_argument("json: 'atoms' must be an array");
    for (const json& atom : j.at("atoms")) {
      atoms.push_back({number_field(atom, "x"), number_field(atom, "w")});
    }
  }
  const double density = j.contains("density") ? number_field(j, "density") : 0.0;
  return Measure(number_field(j, "a"), number_field(j, "b"), std::move(atoms), density);
}

json expoly_to_json(const ExpPolynomial& p) {
  json out = json::array();
  for (const ExpTerm& t : p.terms()) {
    out.push_back({{"re_lambda", t.lambda.real()},
                   {"im_lambda", t.lambda.imag()},
                   {"j", t.power},
                   {"re_c", t.coeff.real()},
                   {"im_c", t.coeff.imag()}});
  }
  return out;
}

ExpPolynomial expoly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("json: exponential polynomial must be an array");
  std::vector<ExpTerm> terms;
  for (const json& t : j) {
    if (!t.contains("j") || !t.at("j").is_number_integer() || t.at("j").get<int>() < 0) {
      throw std::invalid_argument("json: term power 'j' must be a nonnegative integer");
    }
    terms.push_back({{number_field(t, "re_lambda"), number_field(t, "im_lambda")},
                     t.at("j").get<int>(),
                     {number_field(t, "re_c"), number_field(t, "im_c")}});
  }
  return ExpPolynomial(std::move(terms));
}

json bound_report_to_json(const BoundReport& r) {
  return {{"rule", r.rule},
          {"f", r.function},
          {"p", to_string(r.p)},
          {"q", to_string(r.q)},
          {"value", r.functional_value},
          {"deriv_norm", r.derivative_norm},
          {"kernel_norm", r.kernel_norm},
          {"bound", r.bound},
          {"holds", r.holds}};
}

json verification_to_json(const VerificationRecord& r) {
  return {{"rule", r.rule},   {"f", r.function},         {"lhs", r.lhs},
          {"rhs", r.rhs},     {"abs_err", r.abs_err},    {"pass", r.pass}};
}

std::string to_json_line(const VerificationRecord& r) { return verification_to_json(r).dump(); }

}  // namespace quadfact
