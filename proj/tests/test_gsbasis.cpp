#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

namespace opalg {
namespace {

using testing::P;
using testing::W;

const auto kZ = testing::letters({"z1", "z2"});
const Alphabet kBase = Alphabet::parse("z1,z2");

GeneratorSet diff_counterexample_config() {
  GeneratorSet gs(OrderSpec(Preset::dt, kBase), kZ);
  gs.add_identity(resolve_catalog("diff:1?a=1,b=0,c=0").opis.front());
  gs.add_concrete(P("z1*z2 - 1"));
  return gs;
}

GeneratorSet rb_commutator(const char* lambda) {
  GeneratorSet gs(OrderSpec(Preset::db, kBase), kZ);
  gs.add_identity(resolve_catalog(std::string("rb:6?lambda=") + lambda).opis.front());
  gs.add_concrete(P("z2*z1 - z1*z2"), "comm");
  return gs;
}

GeneratorSet catalog_only(const char* selector, const std::vector<Symbol>& letters, const Alphabet& base) {
  CatalogEntry e = resolve_catalog(selector);
  GeneratorSet gs(OrderSpec(e.declared_order, base), letters);
  for (const auto& phi : e.opis) gs.add_identity(phi);
  return gs;
}

TEST(DiffCounterexample, SingleInclusionWithIrreducibleResidue) {
  GeneratorSet gs = diff_counterexample_config();
  const OrderSpec& dt = gs.order();
  const Opi& phi = gs.opis().front();
  Generator f = make_generator(phi.instantiate(Assignment{W("z1"), W("z2")}), dt, "phi(z1, z2)", true);
  Generator g = make_generator(P("z1*z2 - 1"), dt, "g", false);
  auto records = compositions(f, g);
  ASSERT_EQ(records.size(), 1u);
  const auto& r = records.front();
  EXPECT_EQ(r.kind, CompositionRecord::Kind::inclusion);
  EXPECT_EQ(r.w, W("[z1*z2]"));
  ASSERT_TRUE(r.q.has_value());
  EXPECT_EQ(to_string(*r.q), "[@]");
  EXPECT_EQ(r.value, P("-z1*[z2] - [z1]*z2 + [1]"));

  RuleSet rules = gs.rules();
  auto t = is_trivial(r.value, rules, r.w, 10000);
  EXPECT_EQ(t.verdict, Triviality::not_trivial);
  EXPECT_EQ(t.residue, P("-z1*[z2] - [z1]*z2"));
  for (const auto& [w, c] : t.residue.terms()) EXPECT_FALSE(rules.is_reducible(w)) << to_string(w);
  EXPECT_TRUE(compositions(g, f).empty());
}

TEST(DiffCounterexample, CheckGsFailsWithTheWitness) {
  auto rep = check_gs(diff_counterexample_config(), {2, 1}, 10000);
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.label(), "NOT GS at (2, 1)");
  EXPECT_EQ(rep.route, "none");
  bool witness = false;
  for (const auto& f : rep.failures)
    witness = witness || (f.w == W("[z1*z2]") && f.kind == CompositionRecord::Kind::inclusion &&
                          f.triviality->residue == P("-z1*[z2] - [z1]*z2"));
  EXPECT_TRUE(witness);
  ASSERT_EQ(rep.no_subword.size(), 1u);
  EXPECT_FALSE(rep.no_subword.front().passed);
}

TEST(Triviality, RejectsMonomialsNotBelowW) {
  RuleSet rules = diff_counterexample_config().rules();
  EXPECT_THROW(is_trivial(P("[z1*z2]"), rules, W("[z1*z2]"), 100), InvalidArgument);
  EXPECT_EQ(is_trivial(OPoly(), rules, W("z1"), 100).verdict, Triviality::trivial);
}

TEST(RotaBaxter, CommutatorIsGsForBothWeights) {
  for (const char* lambda : {"0", "1"}) {
    auto rep = check_gs(rb_commutator(lambda), {3, 2}, 10000);
    EXPECT_TRUE(rep.passed) << lambda;
    EXPECT_EQ(rep.not_trivial, 0u);
    EXPECT_EQ(rep.not_reduced, 0u);
    EXPECT_GT(rep.intersections + rep.inclusions, 0u);
    EXPECT_EQ(rep.label(), "GS-verified at (3, 2)");
    EXPECT_FALSE(rep.route.empty());
  }
}

TEST(RotaBaxter, JobsDoNotChangeTheReport) {
  auto a = check_gs(rb_commutator("1"), {2, 2}, 10000, 1);
  auto b = check_gs(rb_commutator("1"), {2, 2}, 10000, 3);
  EXPECT_EQ(a.intersections, b.intersections);
  EXPECT_EQ(a.inclusions, b.inclusions);
  EXPECT_EQ(a.trivial, b.trivial);
  EXPECT_EQ(a.passed, b.passed);
}

TEST(DiffPrime, IsGs) {
  auto rep = check_gs(catalog_only("diffprime?c=1", kZ, kBase), {2, 2}, 10000);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.route, "theorem hypotheses");
}

TEST(Averaging, UnitInstancesBreakGs) {
  // averaging/1 at (u, 1) and averaging/2 at (1, u) share the lead [[u]]
  auto rep = check_gs(catalog_only("averaging", kZ, kBase), {2, 2}, 10000);
  EXPECT_FALSE(rep.passed);
  bool witness = false;
  OPoly d = P("[z1]*[1] - [1]*[z1]");
  for (const auto& f : rep.failures)
    witness = witness || (f.kind == CompositionRecord::Kind::inclusion && f.w == W("[[z1]]") &&
                          (f.triviality->residue == d || f.triviality->residue == Rational(-1) * d));
  EXPECT_TRUE(witness);
}

TEST(Reynolds, PinnedBoundsAreVacuous) {
  auto rep = check_gs(catalog_only("reynolds?n=4", kZ, kBase), {2, 2}, 10000);
  EXPECT_EQ(rep.instances, 0u);
  EXPECT_TRUE(rep.passed);
}

TEST(Reynolds, FailsAtLargerOpDegree) {
  auto rep = check_gs(catalog_only("reynolds?n=4", kZ, kBase), {0, 5}, 10000);
  EXPECT_GT(rep.instances, 0u);
  EXPECT_FALSE(rep.passed);
  bool witness = false;
  for (const auto& f : rep.failures)
    witness = witness || f.triviality->residue == P("[1]*[1]*[1] - 6*[[1]] + 3*[1]*[1]") ||
              f.triviality->residue == P("-[1]*[1]*[1] + 6*[[1]] - 3*[1]*[1]");
  EXPECT_TRUE(witness);
}

// Brute-force compositions of two concrete leads: every suffix/prefix overlap
// and every occurrence, found by direct scanning.
TEST(Compositions, AgreeWithBruteForce) {
  std::mt19937_64 rng(99);
  OrderSpec db(Preset::db, kBase);
  for (int t = 0; t < 400; ++t) {
    OPoly pf = testing::random_poly(rng, kZ, 2, 3, 2), pg = testing::random_poly(rng, kZ, 2, 2, 1);
    if (pf.is_constant() || pg.is_constant()) continue;
    Generator f = make_generator(pf, db, "f", false), g = make_generator(pg, db, "g", false);
    std::size_t inter = 0;
    const auto& fl = f.lead;
    const auto& gl = g.lead;
    for (std::size_t k = 1; k < std::min(fl.breadth(), gl.breadth()); ++k) {
      bool match = true;
      for (std::size_t i = 0; i < k && match; ++i) match = Word(std::vector<Factor>{fl[fl.breadth() - k + i]}) == Word(std::vector<Factor>{gl[i]});
      if (match) ++inter;
    }
    std::size_t incl = gl.is_unit() ? 0 : testing::brute_occurrences(fl, gl).size();
    if (f.poly == g.poly && incl > 0) --incl;  // the identity context of a generator with itself
    auto rs = compositions(f, g);
    std::size_t got_inter = 0, got_incl = 0;
    for (const auto& r : rs) {
      (r.kind == CompositionRecord::Kind::intersection ? got_inter : got_incl)++;
      for (const auto& [m, c] : r.value.terms()) EXPECT_TRUE(db.less(m, r.w)) << to_string(m) << " vs " << to_string(r.w);
    }
    EXPECT_EQ(got_inter, inter) << to_string(fl) << " / " << to_string(gl);
    EXPECT_EQ(got_incl, incl) << to_string(fl) << " / " << to_string(gl);
  }
}

TEST(Compositions, ValuesLieBelowW) {
  GeneratorSet gs = rb_commutator("1");
  auto gens = bounded_generators(gs, {2, 2});
  auto records = all_compositions(gens);
  ASSERT_FALSE(records.empty());
  for (const auto& r : records)
    for (const auto& [m, c] : r.value.terms()) EXPECT_TRUE(gs.order().less(m, r.w));
}

TEST(BoundedGenerators, MonicDistinctAndWithinBounds) {
  GeneratorSet gs = rb_commutator("1");
  Bounds b{2, 2};
  auto gens = bounded_generators(gs, b);
  ASSERT_GT(gens.size(), 1u);
  EXPECT_FALSE(gens.front().from_identity);
  std::set<std::string> seen;
  for (const auto& g : gens) {
    EXPECT_EQ(leading(g.poly, gs.order()).second, 1);
    EXPECT_EQ(leading(g.poly, gs.order()).first, g.lead);
    if (g.from_identity) EXPECT_TRUE(b.admits(g.lead));
    EXPECT_TRUE(seen.insert(to_string(g.poly)).second);
  }
}

// Generate-and-filter oracle for Irr: every word within bounds whose
// subwords avoid every bounded generator lead.
std::vector<std::string> irr_oracle(const GeneratorSet& gs, const Bounds& b) {
  auto leads = testing::generator_leads(gs, b);
  WordEnumerator e(gs.letters());
  std::vector<Word> out;
  for (const auto& w : e.within(b))
    if (!testing::brute_reducible(w, leads)) out.push_back(w);
  std::sort(out.begin(), out.end(), [&](const Word& x, const Word& y) { return gs.order().less(x, y); });
  std::vector<std::string> s;
  for (const auto& w : out) s.push_back(to_string(w));
  return s;
}

std::vector<std::string> strings(const std::vector<Word>& ws) {
  std::vector<std::string> s;
  for (const auto& w : ws) s.push_back(to_string(w));
  return s;
}

TEST(Irr, RotaBaxterSingleLetterMatchesOracle) {
  auto z = testing::letters({"z"});
  GeneratorSet gs = catalog_only("rb:6?lambda=1", z, Alphabet::parse("z"));
  Bounds b{2, 2};
  auto irr = enumerate_irr(gs.rules(), z, b);
  EXPECT_EQ(strings(irr), irr_oracle(gs, b));
  // normal forms are supported on Irr and idempotent
  RuleSet rules = gs.rules();
  auto irr_strings = strings(irr);
  std::set<std::string> irr_set(irr_strings.begin(), irr_strings.end());
  WordEnumerator e(z);
  for (const auto& w : e.within(b)) {
    auto r = normal_form(OPoly(w), rules);
    ASSERT_FALSE(r.exhausted);
    for (const auto& [m, c] : r.value.terms()) {
      EXPECT_FALSE(rules.is_reducible(m));
      if (b.admits(m)) EXPECT_TRUE(irr_set.count(to_string(m))) << to_string(m);
    }
    EXPECT_EQ(normal_form(r.value, rules).value, r.value);
  }
}

TEST(Irr, CommutatorMatchesOracle) {
  GeneratorSet gs = rb_commutator("0");
  Bounds b{3, 1};
  EXPECT_EQ(strings(enumerate_irr(gs.rules(), kZ, b)), irr_oracle(gs, b));
}

// Structural pattern for averaging: no [[u]*v], [u*[v]] or [[u]]*[v].
bool averaging_pattern_free(const Word& w) {
  for (std::size_t i = 0; i < w.breadth(); ++i) {
    const Factor& f = w[i];
    if (!f.is_bracket()) continue;
    const Word& in = f.inner();
    if (in.breadth() >= 1 && (in[0].is_bracket() || in[in.breadth() - 1].is_bracket())) return false;
    if (in.breadth() == 1 && in[0].is_bracket() && i + 1 < w.breadth() && w[i + 1].is_bracket()) return false;
    if (!averaging_pattern_free(in)) return false;
  }
  return true;
}

// Structural pattern for Reynolds truncated at n: no bracket holding
// 2..n factors that are all brackets.
bool reynolds_pattern_free(const Word& w, std::size_t n) {
  for (const auto& f : w.factors()) {
    if (!f.is_bracket()) continue;
    const Word& in = f.inner();
    bool all_brackets = in.breadth() >= 2 && in.breadth() <= n;
    for (const auto& g : in.factors()) all_brackets = all_brackets && g.is_bracket();
    if (all_brackets) return false;
    if (!reynolds_pattern_free(in, n)) return false;
  }
  return true;
}

TEST(Irr, AveragingMatchesPatternDescription) {
  GeneratorSet gs = catalog_only("averaging", kZ, kBase);
  Bounds b{2, 3};
  auto irr = strings(enumerate_irr(gs.rules(), kZ, b));
  EXPECT_EQ(irr, irr_oracle(gs, b));
  WordEnumerator e(kZ);
  std::set<std::string> want;
  for (const auto& w : e.within(b))
    if (averaging_pattern_free(w)) want.insert(to_string(w));
  EXPECT_EQ(std::set<std::string>(irr.begin(), irr.end()), want);
}

TEST(Irr, ReynoldsMatchesPatternDescription) {
  GeneratorSet gs = catalog_only("reynolds?n=4", kZ, kBase);
  Bounds b{1, 4};
  auto irr = strings(enumerate_irr(gs.rules(), kZ, b));
  EXPECT_EQ(irr, irr_oracle(gs, b));
  WordEnumerator e(kZ);
  std::set<std::string> want;
  for (const auto& w : e.within(b))
    if (reynolds_pattern_free(w, 4)) want.insert(to_string(w));
  EXPECT_EQ(std::set<std::string>(irr.begin(), irr.end()), want);
}

TEST(Quotient, CommutativeRotaBaxter) {
  auto q = QuotientAlgebra::build(rb_commutator("1"), {3, 2}, 10000);
  EXPECT_TRUE(q.report().passed);
  EXPECT_EQ(q.multiply(P("z2"), P("z1")), P("z1*z2"));
  EXPECT_EQ(q.multiply(P("[z1]"), P("[z2]")), q.op(P("z1*[z2] + [z1]*z2 + z1*z2")));
  std::map<Symbol, OPoly> theta{{Symbol("z1"), P("z2")}, {Symbol("z2"), P("z1")}};
  EXPECT_EQ(q.evaluate(P("z1*z2 - z2*z1"), theta), OPoly());
  EXPECT_EQ(q.evaluate(P("[z1]"), theta), P("[z2]"));
  EXPECT_TRUE(q.within_verified_bounds(P("[z1*z2]")));
  EXPECT_FALSE(q.within_verified_bounds(P("z1*z1*z1*z1")));
  std::map<Symbol, OPoly> partial{{Symbol("z1"), P("z2")}};
  EXPECT_THROW(q.evaluate(P("z2"), partial), AlphabetMismatch);
}

TEST(Quotient, RefusedWhenNotGs) {
  EXPECT_THROW(QuotientAlgebra::build(diff_counterexample_config(), {2, 1}, 10000), QuotientRefused);
}

}  // namespace
}  // namespace opalg
