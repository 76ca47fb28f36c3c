#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "opalg/context.hpp"
#include "opalg/enumerate.hpp"
#include "opalg/error.hpp"
#include "opalg/order.hpp"
#include "opalg/poly.hpp"
#include "opalg/word.hpp"

namespace opalg {

/// Substitutes polynomials for variables in every monomial of `body`,
/// extending multilinearly.
inline OPoly substitute_polys(const OPoly& body, const std::vector<Symbol>& variables, const std::vector<OPoly>& values) {
  std::function<OPoly(const Word&)> rec = [&](const Word& w) {
    OPoly out = OPoly::constant(1);
    for (const auto& f : w.factors()) {
      if (f.is_letter()) {
        auto it = std::find(variables.begin(), variables.end(), f.symbol());
        out = out * (it == variables.end() ? OPoly(Word::letter(f.symbol()))
                                           : values[static_cast<std::size_t>(it - variables.begin())]);
      } else {
        out = out * apply_bracket(rec(f.inner()));
      }
    }
    return out;
  };
  OPoly out;
  for (const auto& [w, c] : body.terms()) out += c * rec(w);
  return out;
}

/// Multilinear operated polynomial identity phi(x1, ..., xn). Every monomial
/// of the body contains each variable exactly once and no other letters.
class Opi {
 public:
  Opi() = default;

  Opi(std::string name, std::vector<Symbol> variables, OPoly body)
      : name_(std::move(name)), variables_(std::move(variables)), body_(std::move(body)) {
    if (body_.is_zero()) throw InvalidArgument("identity '" + name_ + "' has a zero body");
    std::map<Symbol, std::size_t> index;
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (!index.emplace(variables_[i], i).second)
        throw InvalidArgument("duplicate variable '" + variables_[i].name() + "' in '" + name_ + "'");
    for (const auto& [w, c] : body_.terms()) {
      std::vector<int> seen(variables_.size(), 0);
      for_each_letter(w, [&](Symbol s) {
        auto it = index.find(s);
        if (it == index.end())
          throw NotMultilinear("monomial " + to_string(w) + " of '" + name_ + "' contains non-variable letter '" +
                               s.name() + "'");
        ++seen[it->second];
      });
      for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != 1)
          throw NotMultilinear("variable '" + variables_[i].name() + "' occurs " + std::to_string(seen[i]) +
                               " times in monomial " + to_string(w) + " of '" + name_ + "'");
    }
  }

  /// Builds from polynomial text over variables x1..xn, where n is the
  /// largest index that occurs.
  static Opi parse(const std::string& name, std::string_view text) {
    OPoly body = parse_poly(text);
    std::size_t n = 0;
    for (const auto& [w, c] : body.terms())
      for_each_letter(w, [&](Symbol s) {
        if (!is_variable_name(s.name()))
          throw InvalidArgument("identity letters must be variables x1, x2, ...; got '" + s.name() + "'");
        n = std::max<std::size_t>(n, std::stoul(s.name().substr(1)));
      });
    return Opi(name, standard_variables(n), std::move(body));
  }

  static std::vector<Symbol> standard_variables(std::size_t n) {
    std::vector<Symbol> v;
    for (std::size_t i = 1; i <= n; ++i) v.emplace_back("x" + std::to_string(i));
    return v;
  }

  const std::string& name() const noexcept { return name_; }
  const std::vector<Symbol>& variables() const noexcept { return variables_; }
  std::size_t arity() const noexcept { return variables_.size(); }
  const OPoly& body() const noexcept { return body_; }

  Word lead(const OrderSpec& order) const { return leading(body_, order).first; }
  Schema lead_schema(const OrderSpec& order) const { return Schema(lead(order), variables_); }

  /// phi(u1, ..., un) for words; monomial-wise substitution.
  OPoly instantiate(const Assignment& sigma) const {
    check_arity(sigma.size());
    std::vector<Term> out;
    out.reserve(body_.size());
    for (const auto& [w, c] : body_.terms()) out.emplace_back(substitute_word(w, sigma), c);
    return OPoly::from_terms(std::move(out));
  }

  OPoly instantiate(const std::map<Symbol, Word>& sigma) const {
    Assignment a;
    for (Symbol v : variables_) {
      auto it = sigma.find(v);
      if (it == sigma.end()) throw InvalidArgument("no value for variable '" + v.name() + "' of '" + name_ + "'");
      a.push_back(it->second);
    }
    return instantiate(a);
  }

  /// phi(r1, ..., rn) for polynomials, by multilinear extension.
  OPoly instantiate_poly(const std::vector<OPoly>& values) const {
    check_arity(values.size());
    return substitute_polys(body_, variables_, values);
  }

  /// Substitutes words into any word over the variables (e.g. the lead).
  Word substitute_word(const Word& w, const Assignment& sigma) const {
    return map_letters(w, [&](Symbol s) { return sigma[variable_index(s)]; });
  }

  std::size_t variable_index(Symbol s) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
      if (variables_[i] == s) return i;
    throw InvalidArgument("'" + s.name() + "' is not a variable of '" + name_ + "'");
  }

 private:
  void check_arity(std::size_t n) const {
    if (n != variables_.size())
      throw InvalidArgument("'" + name_ + "' takes " + std::to_string(variables_.size()) + " arguments, got " +
                            std::to_string(n));
  }

  std::string name_;
  std::vector<Symbol> variables_;
  OPoly body_;
};

/// Calls fn(assignment) for every assignment of words to `arity` variables
/// whose total z-degree is at most zmax and total op-degree at most omax.
template <typename Fn>
void for_each_bounded_assignment(WordEnumerator& words, std::size_t arity, std::size_t zmax, std::size_t omax, Fn&& fn) {
  Assignment sigma(arity);
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t zl, std::size_t ol) {
    if (i == arity) {
      fn(static_cast<const Assignment&>(sigma));
      return;
    }
    for (std::size_t z = 0; z <= zl; ++z)
      for (std::size_t o = 0; o <= ol; ++o)
        for (const auto& w : words.exact(z, o)) {
          sigma[i] = w;
          rec(i + 1, zl - z, ol - o);
        }
  };
  rec(0, zmax, omax);
}

/// Calls fn(assignment) for every assignment where each word is within bounds.
template <typename Fn>
void for_each_assignment(const std::vector<Word>& pool, std::size_t arity, Fn&& fn) {
  Assignment sigma(arity);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == arity) {
      fn(static_cast<const Assignment&>(sigma));
      return;
    }
    for (const auto& w : pool) {
      sigma[i] = w;
      rec(i + 1);
    }
  };
  rec(0);
}

struct Instance {
  std::size_t opi = 0;  // index into the identity list
  Assignment sigma;
  OPoly value;
  Word lead;
};

/// S_Phi(Z) restricted to instances whose leading monomial lies within
/// bounds. Zero instances are skipped; equal polynomials are emitted once.
inline std::vector<Instance> s_phi_enumerate(const std::vector<Opi>& phis, const std::vector<Symbol>& letters,
                                             const Bounds& bounds, const OrderSpec& order) {
  std::vector<Instance> out;
  std::unordered_multimap<std::size_t, std::size_t> seen;  // hash -> index into out
  WordEnumerator words(letters);
  for (std::size_t k = 0; k < phis.size(); ++k) {
    const Opi& phi = phis[k];
    std::size_t min_z = SIZE_MAX, min_o = SIZE_MAX;
    for (const auto& [w, c] : phi.body().terms()) {
      std::size_t letters_z = w.z_degree() - phi.arity();
      min_z = std::min(min_z, letters_z);
      min_o = std::min(min_o, w.op_degree());
    }
    if (min_z > bounds.z_degree || min_o > bounds.op_degree) continue;
    for_each_bounded_assignment(words, phi.arity(), bounds.z_degree - min_z, bounds.op_degree - min_o,
                                [&](const Assignment& sigma) {
                                  OPoly v = phi.instantiate(sigma);
                                  if (v.is_zero()) return;
                                  Word lead = leading(v, order).first;
                                  if (!bounds.admits(lead)) return;
                                  std::size_t h = v.hash();
                                  auto [lo, hi] = seen.equal_range(h);
                                  for (auto it = lo; it != hi; ++it)
                                    if (out[it->second].value == v) return;
                                  seen.emplace(h, out.size());
                                  out.push_back({k, sigma, std::move(v), std::move(lead)});
                                });
  }
  return out;
}

struct NoSubwordReport {
  bool passed = true;
  std::string lead;
  std::optional<Context> witness_context;  // where the offending product sits
  std::string witness;                     // the offending product of variables
};

/// Checks that the leading monomial has no subword that is a product of two
/// or more variables, at any nesting depth.
inline NoSubwordReport check_lm_no_subword(const Opi& phi, const OrderSpec& order) {
  NoSubwordReport r;
  Word lead = phi.lead(order);
  r.lead = to_string(lead);
  auto is_var = [&](const Factor& f) {
    if (!f.is_letter()) return false;
    for (Symbol v : phi.variables())
      if (v == f.symbol()) return true;
    return false;
  };
  visit_starts(lead, [&](const std::vector<std::size_t>& path, const Word& level, std::size_t i) {
    if (i + 1 < level.breadth() && is_var(level[i]) && is_var(level[i + 1])) {
      Position p{path, i, i + 2};
      r.passed = false;
      r.witness_context = context_at(lead, p);
      r.witness = to_string(segment_at(lead, p));
      return false;
    }
    return true;
  });
  return r;
}

struct StabilityViolation {
  Assignment sigma;
  std::string expected;  // lead of phi with sigma substituted
  std::string actual;    // lead of the instance
};

struct StabilityReport {
  std::string identity;
  std::size_t checked = 0;
  std::size_t zero_instances = 0;
  std::size_t violation_count = 0;
  std::vector<StabilityViolation> violations;  // the first few
  bool passed() const { return violation_count == 0; }
};

namespace detail {

inline void stability_check_one(const Opi& phi, const Word& lead, const OrderSpec& order, const Assignment& sigma,
                                StabilityReport& r, std::size_t max_violations) {
  ++r.checked;
  OPoly v = phi.instantiate(sigma);
  if (v.is_zero()) {
    ++r.zero_instances;
    return;
  }
  Word expected = phi.substitute_word(lead, sigma);
  Word actual = leading(v, order).first;
  if (actual == expected) return;
  ++r.violation_count;
  if (r.violations.size() < max_violations) r.violations.push_back({sigma, to_string(expected), to_string(actual)});
}

}  // namespace detail

/// For every assignment with each word within bounds (unit included), checks
/// that a nonzero instance has leading monomial phi-bar(u1, ..., un).
inline StabilityReport check_lm_stability(const Opi& phi, const OrderSpec& order, const std::vector<Symbol>& letters,
                                          const Bounds& bounds, std::size_t max_violations = 20) {
  StabilityReport r;
  r.identity = phi.name();
  WordEnumerator e(letters);
  auto pool = e.within(bounds);
  Word lead = phi.lead(order);
  for_each_assignment(pool, phi.arity(), [&](const Assignment& sigma) {
    detail::stability_check_one(phi, lead, order, sigma, r, max_violations);
  });
  return r;
}

/// Same check over assignments whose substituted leading monomial lies within
/// bounds (the instances that can take part in bounded compositions).
inline StabilityReport check_lm_stability_lead_bounded(const Opi& phi, const OrderSpec& order,
                                                       const std::vector<Symbol>& letters, const Bounds& bounds,
                                                       std::size_t max_violations = 20) {
  StabilityReport r;
  r.identity = phi.name();
  Word lead = phi.lead(order);
  std::size_t lz = lead.z_degree() - phi.arity(), lo = lead.op_degree();
  if (lz > bounds.z_degree || lo > bounds.op_degree) return r;
  WordEnumerator e(letters);
  for_each_bounded_assignment(e, phi.arity(), bounds.z_degree - lz, bounds.op_degree - lo, [&](const Assignment& sigma) {
    detail::stability_check_one(phi, lead, order, sigma, r, max_violations);
  });
  return r;
}

}  // namespace opalg
