#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "opalg/context.hpp"
#include "opalg/enumerate.hpp"
#include "opalg/error.hpp"
#include "opalg/opi.hpp"
#include "opalg/order.hpp"
#include "opalg/poly.hpp"
#include "opalg/rewrite.hpp"

namespace opalg {

/// Concrete generators G (monic) and identities Phi instantiated over the
/// letters, under one order.
class GeneratorSet {
 public:
  GeneratorSet(OrderSpec order, std::vector<Symbol> letters) : order_(std::move(order)), letters_(std::move(letters)) {}

  void add_concrete(const OPoly& g, std::string id = {}) {
    if (g.is_constant()) throw InvalidArgument("constant generator " + to_string(g));
    if (id.empty()) id = "g" + std::to_string(concrete_.size() + 1);
    concrete_.push_back(monicize(g, order_));
    concrete_ids_.push_back(std::move(id));
  }
  void add_identity(const Opi& phi) { opis_.push_back(phi); }

  const OrderSpec& order() const noexcept { return order_; }
  const std::vector<Symbol>& letters() const noexcept { return letters_; }
  const std::vector<OPoly>& concrete() const noexcept { return concrete_; }
  const std::vector<std::string>& concrete_ids() const noexcept { return concrete_ids_; }
  const std::vector<Opi>& opis() const noexcept { return opis_; }

  /// Identities first, then concrete generators, in insertion order.
  RuleSet rules() const {
    RuleSet r(order_);
    for (const auto& phi : opis_) r.add_identity(phi);
    for (std::size_t i = 0; i < concrete_.size(); ++i) r.add_concrete(concrete_[i], concrete_ids_[i]);
    return r;
  }

 private:
  OrderSpec order_;
  std::vector<Symbol> letters_;
  std::vector<OPoly> concrete_;
  std::vector<std::string> concrete_ids_;
  std::vector<Opi> opis_;
};

/// A generator taking part in compositions: a concrete polynomial or an
/// identity instance, monic.
struct Generator {
  std::string label;
  OPoly poly;
  Word lead;
  bool from_identity = false;
};

enum class Triviality {
  trivial,        // reduced to 0
  not_trivial,    // nonzero irreducible residue: conclusive
  not_reduced,    // fuel ran out before a normal form was reached
};

inline std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::trivial: return "trivial";
    case Triviality::not_trivial: return "NOT TRIVIAL";
    case Triviality::not_reduced: return "not reduced to zero";
  }
  return "?";
}

struct TrivialityResult {
  Triviality verdict = Triviality::trivial;
  OPoly residue;
  std::size_t steps = 0;
};

/// Sufficient triviality test modulo (rules, w): reduce h and compare with 0.
/// Every monomial of h must lie below w.
inline TrivialityResult is_trivial(const OPoly& h, const RuleSet& rules, const Word& w, std::size_t fuel) {
  for (const auto& [m, c] : h.terms())
    if (!rules.order().less(m, w))
      throw InvalidArgument("monomial " + to_string(m) + " is not below " + to_string(w));
  ReduceOptions opt;
  opt.fuel = fuel;
  opt.descent = DescentCheck::require;
  auto nf = normal_form(h, rules, opt);
  TrivialityResult r;
  r.residue = nf.value;
  r.steps = nf.steps;
  if (nf.exhausted)
    r.verdict = Triviality::not_reduced;
  else
    r.verdict = nf.value.is_zero() ? Triviality::trivial : Triviality::not_trivial;
  return r;
}

struct CompositionRecord {
  enum class Kind { intersection, inclusion };
  Kind kind = Kind::intersection;
  std::size_t f = 0, g = 0;  // generator indices
  std::string f_label, g_label;
  Word w;
  Word u, v;                  // intersection: w = f*u = v*g
  std::optional<Context> q;   // inclusion: w = f = q|g
  OPoly value;
  std::optional<TrivialityResult> triviality;
};

inline std::string to_string(CompositionRecord::Kind k) {
  return k == CompositionRecord::Kind::intersection ? "intersection" : "inclusion";
}

/// All compositions of the ordered pair (f, g):
///   intersection: w = f.lead*u = v*g.lead with max(|f|,|g|) < |w| < |f|+|g|
///                 (breadths), value f*u - v*g;
///   inclusion:    f.lead = q|g.lead, value f - q|g (the pair of a generator
///                 with itself at the identity context is skipped).
inline std::vector<CompositionRecord> compositions(const Generator& f, const Generator& g, std::size_t fi = 0,
                                                   std::size_t gi = 1) {
  std::vector<CompositionRecord> out;
  const Word& fl = f.lead;
  const Word& gl = g.lead;
  const std::size_t nf = fl.breadth(), ng = gl.breadth();
  for (std::size_t k = 1; k < std::min(nf, ng); ++k) {
    if (!(fl.slice(nf - k, nf) == gl.slice(0, k))) continue;
    CompositionRecord r;
    r.kind = CompositionRecord::Kind::intersection;
    r.f = fi;
    r.g = gi;
    r.f_label = f.label;
    r.g_label = g.label;
    r.u = gl.slice(k, ng);
    r.v = fl.slice(0, nf - k);
    r.w = fl * r.u;
    r.value = f.poly * OPoly(r.u) - OPoly(r.v) * g.poly;
    out.push_back(std::move(r));
  }
  if (!gl.is_unit() && gl.z_degree() <= fl.z_degree() && gl.op_degree() <= fl.op_degree()) {
    const bool same = f.poly == g.poly;
    for (auto& q : occurrences(fl, gl)) {
      if (same && q.is_identity()) continue;
      CompositionRecord r;
      r.kind = CompositionRecord::Kind::inclusion;
      r.f = fi;
      r.g = gi;
      r.f_label = f.label;
      r.g_label = g.label;
      r.w = fl;
      r.value = f.poly - substitute(q, g.poly);
      r.q = std::move(q);
      out.push_back(std::move(r));
    }
  }
  return out;
}

inline Generator make_generator(const OPoly& p, const OrderSpec& order, std::string label, bool from_identity) {
  OPoly m = monicize(p, order);
  Word lead = leading(m, order).first;
  return Generator{std::move(label), std::move(m), std::move(lead), from_identity};
}

inline std::string instance_label(const Opi& phi, const Assignment& sigma) {
  std::string s = phi.name() + "(";
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) s += ", ";
    s += to_string(sigma[i]);
  }
  return s + ")";
}

/// The concrete generators followed by the monic identity instances whose
/// leads lie within bounds; duplicates (up to scaling) are dropped.
inline std::vector<Generator> bounded_generators(const GeneratorSet& gs, const Bounds& bounds) {
  std::vector<Generator> out;
  for (std::size_t i = 0; i < gs.concrete().size(); ++i)
    out.push_back(make_generator(gs.concrete()[i], gs.order(), gs.concrete_ids()[i], false));
  auto inst = s_phi_enumerate(gs.opis(), gs.letters(), bounds, gs.order());
  std::vector<OPoly> seen;
  for (auto& in : inst) {
    OPoly m = monicize(in.value, gs.order());
    if (m.is_constant()) continue;
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
    seen.push_back(m);
    out.push_back(make_generator(m, gs.order(), instance_label(gs.opis()[in.opi], in.sigma), true));
  }
  return out;
}

/// Every composition among the generators within bounds, ordered by pair
/// (f, g) and then by overlap or occurrence.
inline std::vector<CompositionRecord> all_compositions(const std::vector<Generator>& gens) {
  std::vector<CompositionRecord> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      auto rs = compositions(gens[i], gens[j], i, j);
      for (auto& r : rs) out.push_back(std::move(r));
    }
  return out;
}

/// Runs the triviality test on every record, optionally on several threads.
/// Results are stored in place, so the order does not depend on scheduling.
inline void decide_all(std::vector<CompositionRecord>& records, const RuleSet& rules, std::size_t fuel, std::size_t jobs) {
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(std::max<std::size_t>(jobs, 1));
  auto worker = [&](std::size_t id) {
    try {
      for (std::size_t i = next++; i < records.size(); i = next++)
        records[i].triviality = is_trivial(records[i].value, rules, records[i].w, fuel);
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

struct GsReport {
  Bounds bounds;
  std::size_t fuel = 0;
  std::string order;
  std::size_t concrete = 0;
  std::size_t instances = 0;
  std::size_t intersections = 0;
  std::size_t inclusions = 0;
  std::size_t trivial = 0;
  std::size_t not_trivial = 0;
  std::size_t not_reduced = 0;
  std::vector<CompositionRecord> failures;
  std::vector<NoSubwordReport> no_subword;
  std::vector<StabilityReport> stability;
  bool identities_closed = true;  // instance x instance compositions trivial
  bool algebra_closed = true;     // concrete x concrete compositions trivial
  bool hypotheses_hold = false;
  std::string route;
  bool passed = false;

  std::string label() const {
    return std::string(passed ? "GS-verified" : "NOT GS") + " at (" + std::to_string(bounds.z_degree) + ", " +
           std::to_string(bounds.op_degree) + ")";
  }
};

/// Bounded Groebner-Shirshov check: every composition among concrete
/// generators and identity instances with leads within bounds must reduce
/// to 0. Also evaluates the structural hypotheses (no product of variables
/// in any identity lead, and lead stability) and reports whether they and
/// the two separate closure checks certify the result on their own.
inline GsReport check_gs(const GeneratorSet& gs, const Bounds& bounds, std::size_t fuel, std::size_t jobs = 1) {
  GsReport rep;
  rep.bounds = bounds;
  rep.fuel = fuel;
  rep.order = to_string(gs.order().preset());
  auto gens = bounded_generators(gs, bounds);
  rep.concrete = gs.concrete().size();
  rep.instances = gens.size() - rep.concrete;
  RuleSet rules = gs.rules();
  auto records = all_compositions(gens);
  decide_all(records, rules, fuel, jobs);

  for (auto& r : records) {
    (r.kind == CompositionRecord::Kind::intersection ? rep.intersections : rep.inclusions)++;
    const bool fi = gens[r.f].from_identity, gi = gens[r.g].from_identity;
    switch (r.triviality->verdict) {
      case Triviality::trivial: ++rep.trivial; continue;
      case Triviality::not_trivial: ++rep.not_trivial; break;
      case Triviality::not_reduced: ++rep.not_reduced; break;
    }
    if (fi && gi) rep.identities_closed = false;
    if (!fi && !gi) rep.algebra_closed = false;
    rep.failures.push_back(r);
  }

  bool hyp = true;
  for (const auto& phi : gs.opis()) {
    rep.no_subword.push_back(check_lm_no_subword(phi, gs.order()));
    rep.stability.push_back(check_lm_stability_lead_bounded(phi, gs.order(), gs.letters(), bounds));
    hyp = hyp && rep.no_subword.back().passed && rep.stability.back().passed();
  }
  rep.hypotheses_hold = hyp && rep.identities_closed && rep.algebra_closed;
  rep.passed = rep.failures.empty();
  if (!rep.passed)
    rep.route = "none";
  else if (rep.hypotheses_hold)
    rep.route = "theorem hypotheses";
  else
    rep.route = "composition check";
  return rep;
}

inline bool is_irreducible(const Word& u, const RuleSet& rules) { return !rules.is_reducible(u); }

/// Irreducible words within bounds, ascending. Built by extending
/// irreducible pieces only, since every subword of an irreducible word is
/// irreducible.
inline std::vector<Word> enumerate_irr(const RuleSet& rules, const std::vector<Symbol>& letters, const Bounds& bounds) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>> words;    // irreducible, exact measures
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Factor>> facs;   // irreducible single factors
  std::function<const std::vector<Word>&(std::size_t, std::size_t)> exact;
  std::function<const std::vector<Factor>&(std::size_t, std::size_t)> factors = [&](std::size_t z, std::size_t o) -> const std::vector<Factor>& {
    auto key = std::make_pair(z, o);
    if (auto it = facs.find(key); it != facs.end()) return it->second;
    std::vector<Factor> out;
    if (o == 0) {
      if (z == 1)
        for (Symbol s : letters)
          if (is_irreducible(Word::letter(s), rules)) out.push_back(Factor::letter(s));
    } else {
      for (const auto& w : exact(z, o - 1))
        if (is_irreducible(Word::bracket(w), rules)) out.push_back(Factor::bracket(w));
    }
    return facs.emplace(key, std::move(out)).first->second;
  };
  exact = [&](std::size_t z, std::size_t o) -> const std::vector<Word>& {
    auto key = std::make_pair(z, o);
    if (auto it = words.find(key); it != words.end()) return it->second;
    std::vector<Word> out;
    if (z == 0 && o == 0) out.push_back(Word());
    for (std::size_t fz = 0; fz <= z; ++fz)
      for (std::size_t fo = 0; fo <= o; ++fo) {
        if (fz == 0 && fo == 0) continue;
        const auto& first = factors(fz, fo);
        if (first.empty()) continue;
        const auto& rest = exact(z - fz, o - fo);
        for (const auto& f : first)
          for (const auto& r : rest) {
            std::vector<Factor> fs{f};
            fs.insert(fs.end(), r.factors().begin(), r.factors().end());
            Word w(std::move(fs));
            if (is_irreducible(w, rules)) out.push_back(std::move(w));
          }
      }
    return words.emplace(key, std::move(out)).first->second;
  };
  std::vector<Word> out;
  for (std::size_t z = 0; z <= bounds.z_degree; ++z)
    for (std::size_t o = 0; o <= bounds.op_degree; ++o) {
      const auto& ws = exact(z, o);
      out.insert(out.end(), ws.begin(), ws.end());
    }
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return rules.order().less(a, b); });
  return out;
}

/// Arithmetic in k<M(Z)>/(S_Phi(Z) u G), with every result reduced to the
/// span of irreducible words. Construction runs the bounded GS check and is
/// refused if it fails.
class QuotientAlgebra {
 public:
  static QuotientAlgebra build(const GeneratorSet& gs, const Bounds& bounds, std::size_t fuel, std::size_t jobs = 1) {
    GsReport rep = check_gs(gs, bounds, fuel, jobs);
    if (!rep.passed)
      throw QuotientRefused("generators are " + rep.label() + " (" + std::to_string(rep.failures.size()) +
                            " composition(s) not reduced to 0)");
    return QuotientAlgebra(gs, std::move(rep), fuel);
  }

  const GsReport& report() const noexcept { return report_; }
  const RuleSet& rules() const noexcept { return rules_; }
  const Bounds& verified_bounds() const noexcept { return report_.bounds; }

  /// True if every monomial of f lies within the verified bounds.
  bool within_verified_bounds(const OPoly& f) const {
    for (const auto& [w, c] : f.terms())
      if (!report_.bounds.admits(w)) return false;
    return true;
  }

  OPoly nf(const OPoly& f) const {
    ReduceOptions opt;
    opt.fuel = fuel_;
    opt.descent = DescentCheck::require;
    auto r = normal_form(f, rules_, opt);
    if (r.exhausted) throw FuelExhausted("normal form not reached within fuel " + std::to_string(fuel_));
    return r.value;
  }
  OPoly multiply(const OPoly& a, const OPoly& b) const { return nf(a * b); }
  OPoly op(const OPoly& a) const { return nf(apply_bracket(a)); }

  /// The operated-algebra morphism determined by theta on letters.
  template <typename Map>
  OPoly evaluate(const OPoly& f, const Map& theta) const {
    OPoly out;
    for (const auto& [w, c] : f.terms()) out += c * evaluate_word(w, theta);
    return nf(out);
  }

 private:
  QuotientAlgebra(const GeneratorSet& gs, GsReport rep, std::size_t fuel)
      : rules_(gs.rules()), report_(std::move(rep)), fuel_(fuel) {}

  template <typename Map>
  OPoly evaluate_word(const Word& w, const Map& theta) const {
    OPoly out = OPoly::constant(1);
    for (const auto& f : w.factors()) {
      if (f.is_letter()) {
        auto it = theta.find(f.symbol());
        if (it == theta.end()) throw AlphabetMismatch("no image for letter '" + f.symbol().name() + "'");
        out = multiply(out, it->second);
      } else {
        out = multiply(out, op(evaluate_word(f.inner(), theta)));
      }
    }
    return out;
  }

  RuleSet rules_;
  GsReport report_;
  std::size_t fuel_;
};

}  // namespace opalg
