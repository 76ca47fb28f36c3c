#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opalg/context.hpp"
#include "opalg/enumerate.hpp"
#include "opalg/error.hpp"
#include "opalg/opi.hpp"
#include "opalg/order.hpp"
#include "opalg/poly.hpp"
#include "opalg/rewrite.hpp"

namespace opalg {

struct ConditionResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;
};

/// Outcome of a Rota-Baxter-type or differential-type check. Termination and
/// reduction conditions hold "verified at bounds", never in general.
struct TypeReport {
  std::string kind;     // "rota-baxter" or "differential"
  std::string operand;  // B(x1, x2) or N(x1, x2)
  Bounds bounds;
  std::size_t fuel = 0;
  std::vector<ConditionResult> conditions;
  std::size_t descent_violations = 0;
  bool passed() const {
    for (const auto& c : conditions)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline ConditionResult check_bilinear(const OPoly& operand, const std::vector<Symbol>& vars) {
  ConditionResult r{"(a) linear in x1 and x2", true, 0, {}};
  for (const auto& [w, c] : operand.terms()) {
    ++r.checked;
    std::vector<int> seen(vars.size(), 0);
    bool foreign = false;
    for_each_letter(w, [&](Symbol s) {
      bool hit = false;
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == s) ++seen[i], hit = true;
      if (!hit) foreign = true;
    });
    bool ok = !foreign;
    for (int n : seen) ok = ok && n == 1;
    if (!ok && r.passed) {
      r.passed = false;
      r.witness = to_string(w);
    }
  }
  return r;
}

template <typename Pred>
ConditionResult scan_forbidden(const std::string& name, const OPoly& operand, Pred&& forbidden) {
  ConditionResult r{name, true, 0, {}};
  for (const auto& [w, c] : operand.terms()) {
    ++r.checked;
    visit_starts(w, [&](const std::vector<std::size_t>& path, const Word& level, std::size_t i) {
      std::size_t len = forbidden(level, i);
      if (len == 0) return true;
      Position p{path, i, i + len};
      r.passed = false;
      r.witness = to_string(segment_at(w, p)) + " in monomial " + to_string(w) + " at context " +
                  to_string(context_at(w, p));
      return false;
    });
    if (!r.passed) break;
  }
  return r;
}

}  // namespace detail

/// Checks B against the Rota-Baxter-type conditions for
/// phi = [x1]*[x2] - [B(x1, x2)]:
///   (a) B is linear in x1 and x2;
///   (b) no monomial of B contains [u]*[v] with u, v != 1;
///   (c) [u]*[v] -> [B(u, v)] terminates from every [u]*[v], u, v within bounds;
///   (d) B(B(u,v),w) - B(u,B(v,w)) reduces to 0 for u, v, w != 1 within bounds.
inline TypeReport check_rb_operand(const OPoly& b, const std::vector<Symbol>& letters, const Bounds& bounds,
                                   std::size_t fuel) {
  const auto vars = Opi::standard_variables(2);
  TypeReport rep;
  rep.kind = "rota-baxter";
  rep.operand = to_string(b);
  rep.bounds = bounds;
  rep.fuel = fuel;
  rep.conditions.push_back(detail::check_bilinear(b, vars));
  rep.conditions.push_back(detail::scan_forbidden(
      "(b) no [u]*[v] subword", b, [](const Word& level, std::size_t i) -> std::size_t {
        if (i + 1 >= level.breadth()) return 0;
        const Factor& f = level[i];
        const Factor& g = level[i + 1];
        return f.is_bracket() && g.is_bracket() && !f.inner().is_unit() && !g.inner().is_unit() ? 2 : 0;
      }));
  if (!rep.conditions[0].passed) return rep;

  RuleSet pi(OrderSpec(Preset::db, Alphabet(letters)));
  pi.add_directed(Schema(parse_word("[x1]*[x2]"), vars), apply_bracket(b), "pi");
  ReduceOptions opt;
  opt.fuel = fuel;
  opt.descent = DescentCheck::record;
  WordEnumerator e(letters);

  ConditionResult term{"(c) terminating (verified at bounds)", true, 0, {}};
  const auto all = e.within(bounds);
  for (const auto& u : all)
    for (const auto& v : all) {
      ++term.checked;
      auto nf = normal_form(OPoly(Word::bracket(u) * Word::bracket(v)), pi, opt);
      rep.descent_violations += nf.descent_violations;
      if (nf.exhausted && term.passed) {
        term.passed = false;
        term.witness = "no normal form within fuel " + std::to_string(fuel) + " from [" + to_string(u) + "]*[" +
                       to_string(v) + "]";
      }
    }
  rep.conditions.push_back(term);

  ConditionResult assoc{"(d) B(B(u,v),w) - B(u,B(v,w)) ->* 0 (verified at bounds)", true, 0, {}};
  const auto nonunit = e.nonunit_within(bounds);
  for (const auto& u : nonunit)
    for (const auto& v : nonunit) {
      OPoly buv = substitute_polys(b, vars, {OPoly(u), OPoly(v)});
      for (const auto& w : nonunit) {
        ++assoc.checked;
        OPoly bvw = substitute_polys(b, vars, {OPoly(v), OPoly(w)});
        OPoly h = substitute_polys(b, vars, {buv, OPoly(w)}) - substitute_polys(b, vars, {OPoly(u), bvw});
        auto nf = normal_form(h, pi, opt);
        rep.descent_violations += nf.descent_violations;
        if ((nf.exhausted || !nf.value.is_zero()) && assoc.passed) {
          assoc.passed = false;
          assoc.witness = "u=" + to_string(u) + ", v=" + to_string(v) + ", w=" + to_string(w) + " leaves " +
                          (nf.exhausted ? std::string("(fuel exhausted) ") : std::string()) + to_string(nf.value);
        }
      }
    }
  rep.conditions.push_back(assoc);
  return rep;
}

/// Extracts B from phi = c*([x1]*[x2] - [B]) and checks it.
inline OPoly rb_operand_of(const Opi& phi) {
  const Word lead = parse_word("[x1]*[x2]");
  if (phi.variables() != Opi::standard_variables(2))
    throw ShapeMismatch("'" + phi.name() + "' must be an identity in x1, x2");
  Rational c = phi.body().coefficient(lead);
  if (c == 0) throw ShapeMismatch("'" + phi.name() + "' has no [x1]*[x2] term");
  OPoly rest = Rational(1 / c) * phi.body() - OPoly(lead);
  std::vector<Term> b;
  for (const auto& [w, d] : rest.terms()) {
    if (w.breadth() != 1 || !w[0].is_bracket())
      throw ShapeMismatch("'" + phi.name() + "' is not of the form [x1]*[x2] - [B]: term " + to_string(w));
    b.emplace_back(w[0].inner(), -d);
  }
  return OPoly::from_terms(std::move(b));
}

inline TypeReport check_rb_type(const Opi& phi, const std::vector<Symbol>& letters, const Bounds& bounds,
                                std::size_t fuel) {
  return check_rb_operand(rb_operand_of(phi), letters, bounds, fuel);
}

/// Checks N against the differential-type conditions for
/// phi = [x1*x2] - N(x1, x2):
///   (a) N is linear in x1 and x2;
///   (b) no monomial of N contains [u*v] with u, v != 1;
///   (c) N(uv, w) - N(u, vw) reduces to 0 for u, v, w != 1 within bounds,
///       under [u*v] -> N(u, v) with u, v != 1.
inline TypeReport check_diff_operand(const OPoly& n, const std::vector<Symbol>& letters, const Bounds& bounds,
                                     std::size_t fuel) {
  const auto vars = Opi::standard_variables(2);
  TypeReport rep;
  rep.kind = "differential";
  rep.operand = to_string(n);
  rep.bounds = bounds;
  rep.fuel = fuel;
  rep.conditions.push_back(detail::check_bilinear(n, vars));
  rep.conditions.push_back(detail::scan_forbidden(
      "(b) no [u*v] subword", n, [](const Word& level, std::size_t i) -> std::size_t {
        const Factor& f = level[i];
        return f.is_bracket() && f.inner().breadth() >= 2 ? 1 : 0;
      }));
  if (!rep.conditions[0].passed) return rep;

  RuleSet pi(OrderSpec(Preset::dt, Alphabet(letters)));
  pi.add_directed(Schema(parse_word("[x1*x2]"), vars, true), n, "pi");
  ReduceOptions opt;
  opt.fuel = fuel;
  opt.descent = DescentCheck::record;
  WordEnumerator e(letters);

  ConditionResult cocycle{"(c) N(uv,w) - N(u,vw) ->* 0 (verified at bounds)", true, 0, {}};
  const auto nonunit = e.nonunit_within(bounds);
  for (const auto& u : nonunit)
    for (const auto& v : nonunit)
      for (const auto& w : nonunit) {
        ++cocycle.checked;
        OPoly h = substitute_polys(n, vars, {OPoly(u * v), OPoly(w)}) - substitute_polys(n, vars, {OPoly(u), OPoly(v * w)});
        auto nf = normal_form(h, pi, opt);
        rep.descent_violations += nf.descent_violations;
        if ((nf.exhausted || !nf.value.is_zero()) && cocycle.passed) {
          cocycle.passed = false;
          cocycle.witness = "u=" + to_string(u) + ", v=" + to_string(v) + ", w=" + to_string(w) + " leaves " +
                            (nf.exhausted ? std::string("(fuel exhausted) ") : std::string()) + to_string(nf.value);
        }
      }
  rep.conditions.push_back(cocycle);
  return rep;
}

/// Extracts N from phi = c*([x1*x2] - N).
inline OPoly diff_operand_of(const Opi& phi) {
  const Word lead = parse_word("[x1*x2]");
  if (phi.variables() != Opi::standard_variables(2))
    throw ShapeMismatch("'" + phi.name() + "' must be an identity in x1, x2");
  Rational c = phi.body().coefficient(lead);
  if (c == 0) throw ShapeMismatch("'" + phi.name() + "' has no [x1*x2] term");
  return OPoly(lead) - Rational(1 / c) * phi.body();
}

inline TypeReport check_diff_type(const Opi& phi, const std::vector<Symbol>& letters, const Bounds& bounds,
                                  std::size_t fuel) {
  return check_diff_operand(diff_operand_of(phi), letters, bounds, fuel);
}

/// Which type check applies: "rota-baxter" when phi is a multiple of
/// [x1]*[x2] - [B], otherwise "differential" when it has a [x1*x2] term.
inline std::string classify_type(const Opi& phi) {
  if (phi.variables() != Opi::standard_variables(2))
    throw ShapeMismatch("'" + phi.name() + "' must be an identity in x1, x2");
  const Word rb_lead = parse_word("[x1]*[x2]");
  if (phi.body().coefficient(rb_lead) != 0) {
    bool rb_shape = true;
    for (const auto& [w, c] : phi.body().terms())
      if (w != rb_lead && (w.breadth() != 1 || !w[0].is_bracket())) rb_shape = false;
    if (rb_shape) return "rota-baxter";
  }
  if (phi.body().coefficient(parse_word("[x1*x2]")) != 0) return "differential";
  throw ShapeMismatch("'" + phi.name() + "' is neither [x1]*[x2] - [B] nor [x1*x2] - N");
}

/// Dispatches to check_rb_type or check_diff_type by classify_type.
inline TypeReport check_type(const Opi& phi, const std::vector<Symbol>& letters, const Bounds& bounds, std::size_t fuel) {
  return classify_type(phi) == "rota-baxter" ? check_rb_type(phi, letters, bounds, fuel)
                                             : check_diff_type(phi, letters, bounds, fuel);
}

}  // namespace opalg
