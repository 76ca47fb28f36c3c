#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "opalg/context.hpp"
#include "opalg/error.hpp"
#include "opalg/opi.hpp"
#include "opalg/order.hpp"
#include "opalg/poly.hpp"
#include "opalg/word.hpp"

namespace opalg {

/// A rewriting rule.
///
///   concrete: a monic polynomial g rewrites its lead t to t - g.
///   identity: every nonzero instance phi(sigma) rewrites its own leading
///             monomial. Matching runs over all monomials of phi that can
///             lead some instance; a match counts only if the instance's lead
///             is exactly the matched segment.
///   directed: lhs(sigma) -> rhs(sigma) for every sigma, whatever the order
///             says. Instances whose right side contains the left side are
///             skipped.
struct Rule {
  enum class Kind { concrete, identity, directed };
  Kind kind = Kind::concrete;
  std::string id;

  OPoly poly;  // concrete: monic generator
  Word lead;   // concrete: its leading monomial

  Opi opi;                       // identity
  std::vector<Schema> patterns;  // identity: candidate leads, true lead first; directed: lhs

  OPoly rhs;  // directed: right side over the schema variables
};

struct Redex {
  Position position;
  std::size_t rule = 0;
  std::size_t pattern = 0;
  Assignment sigma;
  Word segment;
  OPoly source;  // polynomial with `segment` as its coefficient-1 lead
};

namespace detail {

inline OPoly substitute_terms(const OPoly& p, const std::vector<Symbol>& vars, const Assignment& sigma) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& [w, c] : p.terms())
    out.emplace_back(map_letters(w,
                                 [&](Symbol s) {
                                   for (std::size_t i = 0; i < vars.size(); ++i)
                                     if (vars[i] == s) return sigma[i];
                                   return Word::letter(s);
                                 }),
                     c);
  return OPoly::from_terms(std::move(out));
}

struct CacheKey {
  std::size_t rule;
  Assignment sigma;
  friend bool operator==(const CacheKey& a, const CacheKey& b) { return a.rule == b.rule && a.sigma == b.sigma; }
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const noexcept {
    std::size_t h = k.rule;
    for (const auto& w : k.sigma) h = mix(h, w.hash());
    return h;
  }
};

struct CachedInstance {
  bool valid = false;  // nonzero (identity) or simple (directed)
  Word lead;           // identity: leading monomial of the instance
  OPoly source;
};

}  // namespace detail

class RuleSet {
 public:
  explicit RuleSet(OrderSpec order) : order_(std::move(order)) {}

  RuleSet(const RuleSet& other) : order_(other.order_), rules_(other.rules_) {}
  RuleSet& operator=(const RuleSet& other) {
    if (this != &other) {
      order_ = other.order_;
      rules_ = other.rules_;
      std::lock_guard lock(mutex_);
      cache_.clear();
    }
    return *this;
  }

  const OrderSpec& order() const noexcept { return order_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  bool empty() const noexcept { return rules_.empty(); }

  /// True when every rule rewrites a monomial into strictly smaller ones.
  bool order_compatible() const {
    return std::none_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.kind == Rule::Kind::directed; });
  }

  /// Adds g (monicized). Constants are rejected.
  std::size_t add_concrete(const OPoly& g, std::string id) {
    if (g.is_constant()) throw InvalidArgument("generator '" + id + "' is a constant; its ideal is everything");
    Rule r;
    r.kind = Rule::Kind::concrete;
    r.id = std::move(id);
    r.poly = monicize(g, order_);
    r.lead = leading(r.poly, order_).first;
    rules_.push_back(std::move(r));
    return rules_.size() - 1;
  }

  std::size_t add_identity(const Opi& phi, std::string id = {}) {
    Rule r;
    r.kind = Rule::Kind::identity;
    r.id = id.empty() ? phi.name() : std::move(id);
    r.opi = phi;
    Word lead = phi.lead(order_);
    std::vector<Word> candidates{lead};
    for (const auto& [w, c] : phi.body().terms()) {
      if (w == lead) continue;
      bool dominated = false;
      for (const auto& [v, d] : phi.body().terms())
        if (order_.dominated_for_all_substitutions(w, v)) dominated = true;
      if (!dominated) candidates.push_back(w);
    }
    for (const auto& w : candidates) r.patterns.emplace_back(w, phi.variables());
    rules_.push_back(std::move(r));
    return rules_.size() - 1;
  }

  std::size_t add_directed(Schema lhs, OPoly rhs, std::string id) {
    Rule r;
    r.kind = Rule::Kind::directed;
    r.id = std::move(id);
    r.patterns.push_back(std::move(lhs));
    r.rhs = std::move(rhs);
    rules_.push_back(std::move(r));
    return rules_.size() - 1;
  }

  /// The redex used by the deterministic strategy: the leftmost-outermost
  /// start with any match; there, the longest segment, then the first rule
  /// in declaration order, then pattern and enumeration order.
  std::optional<Redex> find_redex(const Word& w) const {
    std::optional<Redex> found;
    visit_starts(w, [&](const std::vector<std::size_t>& path, const Word& level, std::size_t i) {
      auto cands = candidates_at(path, level, i, true);
      if (cands.empty()) return true;
      found = std::move(cands.front());
      return false;
    });
    return found;
  }

  /// Every redex in w, in the same order the deterministic strategy ranks them.
  std::vector<Redex> all_redexes(const Word& w) const {
    std::vector<Redex> out;
    visit_starts(w, [&](const std::vector<std::size_t>& path, const Word& level, std::size_t i) {
      auto cands = candidates_at(path, level, i, false);
      for (auto& c : cands) out.push_back(std::move(c));
      return true;
    });
    return out;
  }

  bool is_reducible(const Word& w) const { return find_redex(w).has_value(); }

 private:
  std::vector<Redex> candidates_at(const std::vector<std::size_t>& path, const Word& level, std::size_t i,
                                   bool best_only) const {
    std::vector<Redex> cands;
    for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
      const Rule& r = rules_[ri];
      if (r.kind == Rule::Kind::concrete) {
        const std::size_t n = r.lead.breadth();
        if (i + n > level.breadth()) continue;
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
          const Factor& a = level[i + k];
          const Factor& b = r.lead[k];
          ok = a.is_letter() == b.is_letter() &&
               (a.is_letter() ? a.symbol() == b.symbol() : a.inner() == b.inner());
        }
        if (ok) cands.push_back(Redex{Position{path, i, i + n}, ri, 0, {}, r.lead, r.poly});
        continue;
      }
      for (std::size_t pi = 0; pi < r.patterns.size(); ++pi) {
        r.patterns[pi].match_at(level, i, [&](std::size_t end, const Assignment& sigma) {
          if (end == i) return true;
          auto inst = instance(ri, sigma);
          if (!inst.valid) return true;
          Word segment = level.slice(i, end);
          if (r.kind == Rule::Kind::identity && !(inst.lead == segment)) return true;
          cands.push_back(Redex{Position{path, i, end}, ri, pi, sigma, std::move(segment), inst.source});
          return true;
        });
      }
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Redex& a, const Redex& b) { return a.position.end > b.position.end; });
    if (best_only && cands.size() > 1) cands.resize(1);
    return cands;
  }

  detail::CachedInstance instance(std::size_t ri, const Assignment& sigma) const {
    detail::CacheKey key{ri, sigma};
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const Rule& r = rules_[ri];
    detail::CachedInstance ci;
    if (r.kind == Rule::Kind::identity) {
      OPoly v = r.opi.instantiate(sigma);
      if (!v.is_zero()) {
        auto [lead, c] = leading(v, order_);
        if (!lead.is_unit()) {
          ci.valid = true;
          ci.lead = lead;
          ci.source = c == 1 ? v : Rational(1 / c) * v;
        }
      }
    } else {
      const Schema& lhs = r.patterns.front();
      Word l = lhs.apply(sigma);
      OPoly rhs = detail::substitute_terms(r.rhs, lhs.variables(), sigma);
      if (rhs.coefficient(l) == 0) {
        ci.valid = true;
        ci.lead = l;
        ci.source = OPoly(l) - rhs;
      }
    }
    std::lock_guard lock(mutex_);
    if (cache_.size() > 4'000'000) cache_.clear();
    cache_.emplace(std::move(key), ci);
    return ci;
  }

  OrderSpec order_;
  std::vector<Rule> rules_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<detail::CacheKey, detail::CachedInstance, detail::CacheKeyHash> cache_;
};

struct TraceStep {
  std::size_t step = 0;
  std::string rule;
  Word monomial;  // the rewritten monomial q|_segment
  Context context;
  std::vector<Symbol> variables;
  Assignment sigma;
  Rational coefficient;  // the step subtracts coefficient * q|_source
  OPoly source;
};

/// "step k: rule <id>, context <q>, σ {x1=u1, x2=u2}"
inline std::string to_string(const TraceStep& s) {
  std::string out = "step " + std::to_string(s.step) + ": rule " + s.rule + ", context " + to_string(s.context) + ", σ {";
  for (std::size_t i = 0; i < s.sigma.size(); ++i) {
    if (i) out += ", ";
    out += (i < s.variables.size() ? s.variables[i].name() : "?") + "=" + to_string(s.sigma[i]);
  }
  return out + "}";
}

enum class DescentCheck { ignore, record, require };

struct ReduceOptions {
  std::size_t fuel = 10000;
  bool trace = false;
  DescentCheck descent = DescentCheck::record;
  std::optional<std::uint64_t> random_seed;  // set for the randomized strategy
};

struct NormalForm {
  OPoly value;
  std::vector<TraceStep> trace;
  bool exhausted = false;
  std::size_t steps = 0;
  std::size_t descent_violations = 0;
};

namespace detail {

inline std::vector<Symbol> redex_variables(const RuleSet& rules, const Redex& r) {
  const Rule& rule = rules.rules()[r.rule];
  if (rule.kind == Rule::Kind::concrete) return {};
  return rule.patterns[r.pattern].variables();
}

}  // namespace detail

/// Reduces f to a normal form. The deterministic strategy rewrites the
/// greatest reducible monomial at its first redex; with a seed, monomials
/// and redexes are picked at random instead.
inline NormalForm normal_form(const OPoly& f, const RuleSet& rules, const ReduceOptions& opt = {}) {
  const OrderSpec& order = rules.order();
  auto desc = [&](const Word& a, const Word& b) { return order.less(b, a); };
  std::map<Word, Rational, decltype(desc)> working(desc);
  std::map<Word, Rational, StructuralLess> done;
  NormalForm nf;
  std::optional<std::mt19937_64> rng;
  if (opt.random_seed) rng.emplace(*opt.random_seed);

  auto add = [&](const Word& w, const Rational& c) {
    if (auto it = done.find(w); it != done.end()) {
      it->second += c;
      if (it->second == 0) done.erase(it);
      return;
    }
    auto [it, inserted] = working.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) working.erase(it);
    }
  };
  for (const auto& [w, c] : f.terms()) add(w, c);

  while (!working.empty()) {
    auto it = working.begin();
    if (rng) std::advance(it, std::uniform_int_distribution<std::size_t>(0, working.size() - 1)(*rng));
    const Word m = it->first;
    const Rational c = it->second;
    std::optional<Redex> redex;
    if (rng) {
      auto all = rules.all_redexes(m);
      if (!all.empty()) redex = std::move(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(*rng)]);
    } else {
      redex = rules.find_redex(m);
    }
    if (!redex) {
      working.erase(it);
      done.emplace(m, c);
      continue;
    }
    if (nf.steps >= opt.fuel) {
      nf.exhausted = true;
      break;
    }
    ++nf.steps;
    working.erase(it);
    Context q = context_at(m, redex->position);
    OPoly replaced = substitute(q, redex->source);
    for (const auto& [w, d] : replaced.terms()) {
      if (w == m) continue;
      if (opt.descent != DescentCheck::ignore && !order.less(w, m)) {
        ++nf.descent_violations;
        if (opt.descent == DescentCheck::require)
          throw OrderViolation("rewriting " + to_string(m) + " by rule " + rules.rules()[redex->rule].id + " produced " +
                               to_string(w) + ", which is not smaller");
      }
      add(w, -c * d);
    }
    if (opt.trace)
      nf.trace.push_back(TraceStep{nf.steps, rules.rules()[redex->rule].id, m, q, detail::redex_variables(rules, *redex),
                                   redex->sigma, c, redex->source});
  }

  std::vector<Term> terms(done.begin(), done.end());
  for (const auto& t : working) terms.push_back(t);
  nf.value = OPoly::from_terms(std::move(terms));
  return nf;
}

/// One deterministic rewriting step on the greatest reducible monomial, or
/// nothing if f is already in normal form.
inline std::optional<std::pair<OPoly, TraceStep>> one_step(const OPoly& f, const RuleSet& rules) {
  for (const auto& [m, c] : sorted_terms(f, rules.order())) {
    auto redex = rules.find_redex(m);
    if (!redex) continue;
    Context q = context_at(m, redex->position);
    OPoly g = f - c * substitute(q, redex->source);
    TraceStep s{1, rules.rules()[redex->rule].id, m, q, detail::redex_variables(rules, *redex), redex->sigma, c,
                redex->source};
    return std::make_pair(std::move(g), std::move(s));
  }
  return std::nullopt;
}

/// Sum of coefficient * q|_source over a trace; equals f - normal_form(f).
inline OPoly reconstruct(const std::vector<TraceStep>& trace) {
  OPoly sum;
  for (const auto& s : trace) sum += s.coefficient * substitute(s.context, s.source);
  return sum;
}

/// True iff f and g reach the same normal form within fuel.
inline bool joinable(const OPoly& f, const OPoly& g, const RuleSet& rules, std::size_t fuel = 10000) {
  ReduceOptions opt;
  opt.fuel = fuel;
  auto a = normal_form(f, rules, opt);
  auto b = normal_form(g, rules, opt);
  return !a.exhausted && !b.exhausted && a.value == b.value;
}

}  // namespace opalg
