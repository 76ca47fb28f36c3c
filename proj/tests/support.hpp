#pragma once

// Shared generators and brute-force oracles for the test suite. The oracles
// avoid the library's matching and ordering code paths where possible.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <functional>
#include <ostream>
#include <vector>

#include "opalg/opalg.hpp"

namespace opalg {

// GoogleTest printers.
inline void PrintTo(const Word& w, std::ostream* os) { *os << to_string(w); }
inline void PrintTo(const OPoly& f, std::ostream* os) { *os << to_string(f); }
inline void PrintTo(const Context& q, std::ostream* os) { *os << to_string(q); }

}  // namespace opalg

namespace opalg::testing {

inline std::vector<Symbol> letters(std::initializer_list<const char*> names) {
  std::vector<Symbol> out;
  for (const char* n : names) out.emplace_back(n);
  return out;
}

inline Word W(std::string_view text) { return parse_word(text); }
inline OPoly P(std::string_view text) { return parse_poly(text); }

/// Random word with at most `max_z` letters and `max_op` brackets.
inline Word random_word(std::mt19937_64& rng, const std::vector<Symbol>& alphabet, std::size_t max_z,
                        std::size_t max_op) {
  std::size_t z = std::uniform_int_distribution<std::size_t>(0, max_z)(rng);
  std::size_t o = std::uniform_int_distribution<std::size_t>(0, max_op)(rng);
  // Build a flat sequence of z letters, then wrap o random contiguous ranges
  // at random levels.
  std::vector<Factor> fs;
  for (std::size_t i = 0; i < z; ++i)
    fs.push_back(Factor::letter(alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)]));
  Word w(std::move(fs));
  for (std::size_t k = 0; k < o; ++k) {
    // choose a level by walking into random brackets
    std::vector<std::size_t> path;
    const Word* level = &w;
    while (true) {
      std::vector<std::size_t> brackets;
      for (std::size_t i = 0; i < level->breadth(); ++i)
        if ((*level)[i].is_bracket()) brackets.push_back(i);
      if (brackets.empty() || std::uniform_int_distribution<int>(0, 1)(rng) == 0) break;
      std::size_t b = brackets[std::uniform_int_distribution<std::size_t>(0, brackets.size() - 1)(rng)];
      path.push_back(b);
      level = &(*level)[b].inner();
    }
    std::size_t n = level->breadth();
    std::size_t begin = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    std::size_t end = std::uniform_int_distribution<std::size_t>(begin, n)(rng);
    Position p{path, begin, end};
    w = replace_at(w, p, Word::bracket(segment_at(w, p)));
  }
  return w;
}

inline OPoly random_poly(std::mt19937_64& rng, const std::vector<Symbol>& alphabet, std::size_t terms, std::size_t max_z,
                         std::size_t max_op) {
  std::vector<Term> ts;
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::size_t i = 0; i < terms; ++i) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    ts.emplace_back(random_word(rng, alphabet, max_z, max_op), Rational(c));
  }
  return OPoly::from_terms(std::move(ts));
}

/// Independent sort key for the presets: a flat integer sequence compared
/// lexicographically. The leading measures come first; letters encode as
/// 2 + rank, a bracket as a mark above every letter followed by the full key
/// of its inner word, and every word ends with 0 so that a proper prefix
/// compares smaller.
inline void append_key(const Word& w, Preset preset, const Alphabet& base, std::vector<long>& out) {
  out.push_back(static_cast<long>(w.z_degree()));
  if (preset != Preset::deglex) {
    out.push_back(static_cast<long>(w.op_degree()));
    long b = static_cast<long>(w.breadth());
    out.push_back(preset == Preset::db ? b : -b);
  }
  for (const auto& f : w.factors()) {
    if (f.is_letter()) {
      out.push_back(2 + static_cast<long>(*base.rank(f.symbol())));
    } else {
      out.push_back(1000000);
      append_key(f.inner(), preset, base, out);
    }
  }
  out.push_back(0);
}

inline std::vector<long> order_key(const Word& w, Preset preset, const Alphabet& base) {
  std::vector<long> k;
  append_key(w, preset, base, k);
  return k;
}

/// Every context q (any segment at any level, empty segments excluded) with
/// q|_u = w, found by trying all segments and re-substituting.
inline std::vector<std::string> brute_occurrences(const Word& w, const Word& u) {
  std::vector<std::string> out;
  std::function<void(const Word&, std::vector<std::size_t>&)> rec = [&](const Word& level,
                                                                          std::vector<std::size_t>& path) {
    for (std::size_t i = 0; i < level.breadth(); ++i)
      for (std::size_t j = i + 1; j <= level.breadth(); ++j) {
        Position p{path, i, j};
        Context q = context_at(w, p);
        if (q.plug(u) == w) out.push_back(to_string(q));
      }
    for (std::size_t i = 0; i < level.breadth(); ++i)
      if (level[i].is_bracket()) {
        path.push_back(i);
        rec(level[i].inner(), path);
        path.pop_back();
      }
  };
  std::vector<std::size_t> path;
  rec(w, path);
  std::sort(out.begin(), out.end());
  return out;
}

/// Reducibility oracle: w is reducible iff some bounded generator lead occurs
/// in w as a plain subword. Generator leads come from concrete instances, so
/// no schema matching is involved.
inline bool brute_reducible(const Word& w, const std::vector<Word>& leads) {
  for (const auto& l : leads)
    if (!l.is_unit() && !occurrences(w, l).empty()) return true;
  return false;
}

inline std::vector<Word> generator_leads(const GeneratorSet& gs, const Bounds& b) {
  std::vector<Word> out;
  for (const auto& g : bounded_generators(gs, b)) out.push_back(g.lead);
  return out;
}

}  // namespace opalg::testing
