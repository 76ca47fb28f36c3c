#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "opalg/gsbasis.hpp"
#include "opalg/opi.hpp"
#include "opalg/order.hpp"
#include "opalg/poly.hpp"
#include "opalg/type_check.hpp"

namespace opalg {

using Json = nlohmann::ordered_json;

inline Json bounds_json(const Bounds& b) { return Json{{"z_degree", b.z_degree}, {"op_degree", b.op_degree}}; }

inline std::string bounds_text(const Bounds& b) {
  return "(" + std::to_string(b.z_degree) + ", " + std::to_string(b.op_degree) + ")";
}

inline Json assignment_json(const Assignment& sigma) {
  Json j = Json::array();
  for (const auto& w : sigma) j.push_back(to_string(w));
  return j;
}

inline Json to_json(const CompositionRecord& r, const OrderSpec& order) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["f"] = r.f_label;
  j["g"] = r.g_label;
  j["w"] = to_string(r.w);
  if (r.kind == CompositionRecord::Kind::intersection) {
    j["u"] = to_string(r.u);
    j["v"] = to_string(r.v);
  } else {
    j["q"] = to_string(*r.q);
  }
  j["value"] = to_string(r.value, order);
  if (r.triviality) {
    j["verdict"] = to_string(r.triviality->verdict);
    j["residue"] = to_string(r.triviality->residue, order);
    j["steps"] = r.triviality->steps;
  }
  return j;
}

inline std::string describe(const CompositionRecord& r, const OrderSpec& order) {
  std::ostringstream os;
  if (r.kind == CompositionRecord::Kind::intersection)
    os << "intersection of " << r.f_label << " and " << r.g_label << " at w = " << to_string(r.w)
       << " (u = " << to_string(r.u) << ", v = " << to_string(r.v) << ")";
  else
    os << "inclusion of " << r.g_label << " in " << r.f_label << " at w = " << to_string(r.w)
       << ", q = " << to_string(*r.q);
  os << "\n  value:   " << to_string(r.value, order);
  if (r.triviality) {
    os << "\n  reduced: " << to_string(r.triviality->residue, order) << "\n  verdict: " << to_string(r.triviality->verdict);
    if (r.triviality->verdict == Triviality::not_trivial) os << " (irreducible residue)";
  }
  return os.str();
}

inline Json to_json(const StabilityReport& r) {
  Json j;
  j["identity"] = r.identity;
  j["checked"] = r.checked;
  j["zero_instances"] = r.zero_instances;
  j["violations"] = r.violation_count;
  Json w = Json::array();
  for (const auto& v : r.violations)
    w.push_back(Json{{"sigma", assignment_json(v.sigma)}, {"expected", v.expected}, {"actual", v.actual}});
  j["witnesses"] = w;
  j["passed"] = r.passed();
  return j;
}

inline Json to_json(const NoSubwordReport& r) {
  Json j;
  j["lead"] = r.lead;
  j["passed"] = r.passed;
  if (!r.passed) {
    j["witness"] = r.witness;
    j["context"] = to_string(*r.witness_context);
  }
  return j;
}

inline Json to_json(const GsReport& r, const OrderSpec& order, std::size_t max_failures = 50) {
  Json j;
  j["result"] = r.passed ? "PASS" : "FAIL";
  j["label"] = r.label();
  j["order"] = r.order;
  j["bounds"] = bounds_json(r.bounds);
  j["fuel"] = r.fuel;
  j["generators"] = Json{{"concrete", r.concrete}, {"identity_instances", r.instances}};
  j["compositions"] = Json{{"intersection", r.intersections},
                           {"inclusion", r.inclusions},
                           {"trivial", r.trivial},
                           {"not_trivial", r.not_trivial},
                           {"not_reduced", r.not_reduced}};
  Json hyp;
  Json ns = Json::array(), st = Json::array();
  for (const auto& n : r.no_subword) ns.push_back(to_json(n));
  for (const auto& s : r.stability) st.push_back(to_json(s));
  hyp["no_variable_product_in_lead"] = ns;
  hyp["lead_stability"] = st;
  hyp["identity_instances_closed"] = r.identities_closed;
  hyp["algebra_generators_closed"] = r.algebra_closed;
  hyp["hold"] = r.hypotheses_hold;
  j["hypotheses"] = hyp;
  j["route"] = r.route;
  Json f = Json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) f.push_back(to_json(r.failures[i], order));
  j["failures"] = f;
  j["failure_count"] = r.failures.size();
  return j;
}

inline std::string to_text(const GsReport& r, const OrderSpec& order, std::size_t max_failures = 20) {
  std::ostringstream os;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "order " << r.order << ", bounds " << bounds_text(r.bounds) << ", fuel " << r.fuel << "\n";
  os << "generators: " << r.concrete << " concrete, " << r.instances << " identity instances\n";
  os << "compositions: " << r.intersections << " intersection, " << r.inclusions << " inclusion\n";
  os << "trivial: " << r.trivial << ", not trivial: " << r.not_trivial << ", not reduced: " << r.not_reduced << "\n";
  os << "hypotheses:\n";
  for (std::size_t i = 0; i < r.no_subword.size(); ++i) {
    const auto& n = r.no_subword[i];
    const auto& s = r.stability[i];
    os << "  " << s.identity << ": lead " << n.lead << ", no variable product in lead: " << yes(n.passed);
    if (!n.passed) os << " (" << n.witness << " at " << to_string(*n.witness_context) << ")";
    os << ", lead stable: " << yes(s.passed()) << " (" << s.checked << " assignments";
    if (!s.passed()) os << ", " << s.violation_count << " violations";
    os << ")\n";
  }
  os << "  identity instances closed: " << yes(r.identities_closed) << "\n";
  os << "  algebra generators closed: " << yes(r.algebra_closed) << "\n";
  os << "route: " << r.route << "\n";
  for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i)
    os << "failure " << (i + 1) << ": " << describe(r.failures[i], order) << "\n";
  if (r.failures.size() > max_failures) os << "... " << (r.failures.size() - max_failures) << " more failures\n";
  os << "result: " << (r.passed ? "PASS" : "FAIL") << " (" << r.label() << ")\n";
  return os.str();
}

inline Json to_json(const TypeReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["operand"] = r.operand;
  j["bounds"] = bounds_json(r.bounds);
  j["fuel"] = r.fuel;
  Json cs = Json::array();
  for (const auto& c : r.conditions) {
    Json x{{"name", c.name}, {"passed", c.passed}, {"checked", c.checked}};
    if (!c.passed) x["witness"] = c.witness;
    cs.push_back(x);
  }
  j["conditions"] = cs;
  j["descent_violations"] = r.descent_violations;
  j["result"] = r.passed() ? "PASS" : "FAIL";
  return j;
}

inline std::string to_text(const TypeReport& r) {
  std::ostringstream os;
  os << r.kind << " type, operand " << r.operand << ", bounds " << bounds_text(r.bounds) << ", fuel " << r.fuel << "\n";
  for (const auto& c : r.conditions) {
    os << "  " << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.checked << " checked)";
    if (!c.passed) os << "\n    witness: " << c.witness;
    os << "\n";
  }
  if (r.descent_violations) os << "  steps not decreasing under the order: " << r.descent_violations << "\n";
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

inline Json to_json(const OrderAxiomReport& r) {
  Json j;
  j["trials"] = r.trials;
  j["violations"] = r.violations;
  j["result"] = r.passed() ? "PASS" : "FAIL";
  return j;
}

}  // namespace opalg
