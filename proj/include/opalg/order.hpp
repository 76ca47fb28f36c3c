#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "opalg/context.hpp"
#include "opalg/enumerate.hpp"
#include "opalg/error.hpp"
#include "opalg/symbol.hpp"
#include "opalg/word.hpp"

namespace opalg {

enum class Preset { deglex, db, dt };

inline std::string to_string(Preset p) {
  switch (p) {
    case Preset::deglex: return "deglex";
    case Preset::db: return "db";
    case Preset::dt: return "dt";
  }
  return "?";
}

inline Preset parse_preset(std::string_view s) {
  if (s == "deglex") return Preset::deglex;
  if (s == "db") return Preset::db;
  if (s == "dt") return Preset::dt;
  throw InvalidArgument("unknown order preset '" + std::string(s) + "' (expected deglex, db or dt)");
}

/// A monomial-order preset over a base letter order.
///
///   deglex: z-degree, then the lexicographic tail (a shorter prefix is smaller)
///   db:     z-degree, op-degree, breadth ascending, lexicographic tail
///   dt:     z-degree, op-degree, breadth descending, lexicographic tail
///
/// The lexicographic tail compares factor by factor: a letter is below any
/// bracket, letters by base rank, brackets by recursively comparing their
/// contents under the same preset. Letters missing from the base order rank
/// after all base letters, by name; in strict mode they raise AlphabetMismatch.
///
/// db and dt are monomial orders on bracketed words. deglex is one only on
/// bracket-free words.
class OrderSpec {
 public:
  OrderSpec() = default;
  OrderSpec(Preset preset, Alphabet base, bool strict = false)
      : preset_(preset), base_(std::move(base)), strict_(strict) {}

  Preset preset() const noexcept { return preset_; }
  const Alphabet& base() const noexcept { return base_; }
  bool strict() const noexcept { return strict_; }

  std::strong_ordering compare(const Word& u, const Word& v) const { return cmp(u, v); }
  std::strong_ordering operator()(const Word& u, const Word& v) const { return cmp(u, v); }
  bool less(const Word& u, const Word& v) const { return cmp(u, v) < 0; }

  /// True if mu < nu after every substitution of words for the variables,
  /// given that mu and nu contain the same variables once each. Only the
  /// substitution-invariant leading measures are consulted.
  bool dominated_for_all_substitutions(const Word& mu, const Word& nu) const {
    if (mu.z_degree() != nu.z_degree()) return mu.z_degree() < nu.z_degree();
    if (preset_ == Preset::deglex) return false;
    return mu.op_degree() < nu.op_degree();
  }

  friend bool operator==(const OrderSpec& a, const OrderSpec& b) {
    return a.preset_ == b.preset_ && a.base_.letters() == b.base_.letters() && a.strict_ == b.strict_;
  }

 private:
  std::strong_ordering letter_cmp(Symbol a, Symbol b) const {
    if (a == b) return std::strong_ordering::equal;
    auto ra = base_.finite() ? base_.rank(a) : std::nullopt;
    auto rb = base_.finite() ? base_.rank(b) : std::nullopt;
    if (strict_ && base_.finite()) {
      if (!ra) throw AlphabetMismatch("letter '" + a.name() + "' is not in the base order");
      if (!rb) throw AlphabetMismatch("letter '" + b.name() + "' is not in the base order");
    }
    if (ra && rb) return *ra <=> *rb;
    if (ra) return std::strong_ordering::less;
    if (rb) return std::strong_ordering::greater;
    return a <=> b;
  }

  std::strong_ordering cmp(const Word& u, const Word& v) const {
    if (u.is_unit() && v.is_unit()) return std::strong_ordering::equal;
    const auto& mu = u.measures();
    const auto& mv = v.measures();
    if (auto c = mu.z_degree <=> mv.z_degree; c != 0) return c;
    if (preset_ != Preset::deglex) {
      if (auto c = mu.op_degree <=> mv.op_degree; c != 0) return c;
      if (preset_ == Preset::db) {
        if (auto c = mu.breadth <=> mv.breadth; c != 0) return c;
      } else if (auto c = mv.breadth <=> mu.breadth; c != 0) {
        return c;
      }
    }
    const std::size_t n = std::min(mu.breadth, mv.breadth);
    for (std::size_t i = 0; i < n; ++i) {
      const Factor& a = u[i];
      const Factor& b = v[i];
      if (a.is_letter() != b.is_letter()) return a.is_letter() ? std::strong_ordering::less : std::strong_ordering::greater;
      if (a.is_letter()) {
        if (auto c = letter_cmp(a.symbol(), b.symbol()); c != 0) return c;
      } else if (auto c = cmp(a.inner(), b.inner()); c != 0) {
        return c;
      }
    }
    return mu.breadth <=> mv.breadth;
  }

  Preset preset_ = Preset::db;
  Alphabet base_;
  bool strict_ = false;
};

using Comparator = std::function<std::strong_ordering(const Word&, const Word&)>;

struct OrderAxiomReport {
  std::size_t trials = 0;
  std::vector<std::string> violations;  // human-readable witnesses
  bool passed() const { return violations.empty(); }
};

/// Randomized check of the monomial-order axioms on words and contexts drawn
/// uniformly from those within `bounds`: antisymmetry (EQ iff equal),
/// transitivity, compatibility with contexts, and q|_u > u for q != @.
inline OrderAxiomReport check_order_axioms(const Comparator& cmp, const std::vector<Symbol>& letters, const Bounds& bounds,
                                           std::size_t trials, std::uint64_t seed, std::size_t max_violations = 10) {
  WordEnumerator e(letters);
  auto words = e.within(bounds);
  auto contexts = contexts_within(letters, bounds);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_word(0, words.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_ctx(0, contexts.size() - 1);
  OrderAxiomReport report;
  auto fail = [&](std::string msg) {
    if (report.violations.size() < max_violations) report.violations.push_back(std::move(msg));
  };
  auto sign = [](std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); };
  for (std::size_t t = 0; t < trials; ++t) {
    ++report.trials;
    const Word& u = words[pick_word(rng)];
    const Word& v = words[pick_word(rng)];
    const Word& w = words[pick_word(rng)];
    const Context& q = contexts[pick_ctx(rng)];
    int uv = sign(cmp(u, v)), vu = sign(cmp(v, u));
    if (uv != -vu) fail("antisymmetry: " + to_string(u) + " vs " + to_string(v));
    if ((uv == 0) != (u == v)) fail("EQ differs from equality: " + to_string(u) + " vs " + to_string(v));
    int vw = sign(cmp(v, w)), uw = sign(cmp(u, w));
    if (uv < 0 && vw < 0 && uw >= 0)
      fail("transitivity: " + to_string(u) + " < " + to_string(v) + " < " + to_string(w));
    if (uv != 0) {
      const Word& lo = uv < 0 ? u : v;
      const Word& hi = uv < 0 ? v : u;
      if (sign(cmp(q.plug(lo), q.plug(hi))) >= 0)
        fail("context compatibility: " + to_string(lo) + " < " + to_string(hi) + " but not under " + to_string(q));
    }
    if (!q.is_identity()) {
      Word qu = q.plug(u);
      if (sign(cmp(qu, u)) <= 0) {
        Word qqu = q.plug(qu);
        fail("subword increase: " + to_string(q) + " gives descending chain " + to_string(u) + ", " + to_string(qu) +
             ", " + to_string(qqu));
      }
    }
  }
  return report;
}

inline OrderAxiomReport check_order_axioms(const OrderSpec& order, const Bounds& bounds, std::size_t trials,
                                           std::uint64_t seed) {
  if (!order.base().finite()) throw InvalidArgument("order axiom checks need a finite base alphabet");
  return check_order_axioms(Comparator(order), order.base().letters(), bounds, trials, seed);
}

}  // namespace opalg
