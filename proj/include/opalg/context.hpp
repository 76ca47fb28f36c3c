#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "opalg/error.hpp"
#include "opalg/symbol.hpp"
#include "opalg/word.hpp"

namespace opalg {

/// A segment of a word: descend through the bracket factors listed in `path`
/// (top-level indices first), then take factors [begin, end) of that level.
struct Position {
  std::vector<std::size_t> path;
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Position&, const Position&) = default;
};

inline const Word& level_at(const Word& w, const std::vector<std::size_t>& path) {
  const Word* cur = &w;
  for (std::size_t i : path) cur = &(*cur)[i].inner();
  return *cur;
}

inline Word segment_at(const Word& w, const Position& p) { return level_at(w, p.path).slice(p.begin, p.end); }

namespace detail {

inline Word replace_rec(const Word& w, const Position& p, std::size_t depth, const Word& replacement) {
  const auto& f = w.factors();
  std::vector<Factor> out;
  if (depth == p.path.size()) {
    out.reserve(f.size() - (p.end - p.begin) + replacement.breadth());
    out.insert(out.end(), f.begin(), f.begin() + static_cast<std::ptrdiff_t>(p.begin));
    out.insert(out.end(), replacement.factors().begin(), replacement.factors().end());
    out.insert(out.end(), f.begin() + static_cast<std::ptrdiff_t>(p.end), f.end());
  } else {
    out = f;
    std::size_t i = p.path[depth];
    out[i] = Factor::bracket(replace_rec(f[i].inner(), p, depth + 1, replacement));
  }
  return Word(std::move(out));
}

}  // namespace detail

/// Replaces the segment at `p` by `replacement`.
inline Word replace_at(const Word& w, const Position& p, const Word& replacement) {
  return detail::replace_rec(w, p, 0, replacement);
}

/// A word with exactly one hole. Plugging u into the hole gives q|_u.
class Context {
 public:
  /// The identity context consisting of the hole alone.
  Context() : word_(Word::hole()) {}

  explicit Context(Word w) : word_(std::move(w)) {
    if (word_.holes() != 1)
      throw InvalidArgument("a context needs exactly one hole, got " + std::to_string(word_.holes()));
  }

  const Word& word() const noexcept { return word_; }
  bool is_identity() const { return word_.breadth() == 1 && word_[0].is_letter(); }

  /// Location of the hole as a one-factor segment.
  Position hole_position() const {
    Position p;
    const Word* cur = &word_;
    while (true) {
      const auto& f = cur->factors();
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_letter() && f[i].symbol().is_hole()) {
          p.begin = i;
          p.end = i + 1;
          return p;
        }
        if (f[i].is_bracket() && f[i].inner().holes() > 0) {
          p.path.push_back(i);
          cur = &f[i].inner();
          break;
        }
      }
    }
  }

  Word plug(const Word& u) const { return replace_at(word_, hole_position(), u); }

  /// Context composition: (q ∘ q')|_u = q|_{q'|_u}.
  Context compose(const Context& inner) const { return Context(plug(inner.word_)); }

  friend bool operator==(const Context& a, const Context& b) { return a.word_ == b.word_; }

 private:
  Word word_;
};

inline std::string to_string(const Context& q) { return to_string(q.word()); }

/// Context obtained by cutting the segment at `p` out of `w`.
inline Context context_at(const Word& w, const Position& p) { return Context(replace_at(w, p, Word::hole())); }

inline Context parse_context(std::string_view text, const Alphabet& alphabet = Alphabet()) {
  detail::Cursor cur(text, alphabet, true);
  Word w = cur.word();
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  if (w.holes() != 1) throw ParseError("context needs exactly one '@'", text.size());
  return Context(std::move(w));
}

/// Visits every (level path, start index) of `w` in leftmost-outermost order:
/// at each level, start i is visited before the inside of factor i, which is
/// visited before start i+1. The callback returns false to stop.
template <typename Fn>
bool visit_starts(const Word& w, Fn&& fn) {
  std::vector<std::size_t> path;
  std::function<bool(const Word&)> rec = [&](const Word& level) -> bool {
    for (std::size_t i = 0; i < level.breadth(); ++i) {
      if (!fn(static_cast<const std::vector<std::size_t>&>(path), level, i)) return false;
      if (level[i].is_bracket()) {
        path.push_back(i);
        bool go = rec(level[i].inner());
        path.pop_back();
        if (!go) return false;
      }
    }
    return true;
  };
  return rec(w);
}

/// All contexts q with q|_u = w, leftmost-outermost.
inline std::vector<Context> occurrences(const Word& w, const Word& u) {
  if (u.is_unit()) throw InvalidArgument("the unit occurs everywhere; pattern must not be 1");
  std::vector<Context> out;
  const std::size_t n = u.breadth();
  visit_starts(w, [&](const std::vector<std::size_t>& path, const Word& level, std::size_t i) {
    if (i + n > level.breadth()) return true;
    for (std::size_t k = 0; k < n; ++k) {
      const Factor& a = level[i + k];
      const Factor& b = u[k];
      if (a.is_letter() != b.is_letter()) return true;
      if (a.is_letter() ? a.symbol() != b.symbol() : !(a.inner() == b.inner())) return true;
    }
    out.push_back(context_at(w, Position{path, i, i + n}));
    return true;
  });
  return out;
}

/// Variable-to-word assignment, indexed like Schema::variables().
using Assignment = std::vector<Word>;

/// A multilinear pattern: a word over letters and variables where each
/// variable occurs exactly once. Variables match any word, including 1,
/// unless the schema is built with `nonunit`.
class Schema {
 public:
  Schema() = default;

  Schema(Word pattern, std::vector<Symbol> variables, bool nonunit = false)
      : pattern_(std::move(pattern)), variables_(std::move(variables)), nonunit_(nonunit) {
    for (std::size_t i = 0; i < variables_.size(); ++i) index_[variables_[i]] = i;
    std::vector<int> seen(variables_.size(), 0);
    for_each_letter(pattern_, [&](Symbol s) {
      if (auto it = index_.find(s); it != index_.end()) ++seen[it->second];
    });
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (seen[i] != 1)
        throw NotMultilinear("variable '" + variables_[i].name() + "' occurs " + std::to_string(seen[i]) +
                             " times in pattern " + to_string(pattern_));
  }

  const Word& pattern() const noexcept { return pattern_; }
  const std::vector<Symbol>& variables() const noexcept { return variables_; }
  bool nonunit() const noexcept { return nonunit_; }

  /// Calls fn(end, assignment) for every way the pattern matches
  /// level[start, end). Stops early if fn returns false; returns false then.
  template <typename Fn>
  bool match_at(const Word& level, std::size_t start, Fn&& fn) const {
    Assignment sigma(variables_.size());
    std::function<bool(std::size_t)> top = [&](std::size_t end) { return fn(end, static_cast<const Assignment&>(sigma)); };
    return match_seq(pattern_, 0, level, start, false, sigma, top);
  }

  /// Substitutes an assignment into the pattern.
  Word apply(const Assignment& sigma) const {
    return map_letters(pattern_, [&](Symbol s) {
      if (auto it = index_.find(s); it != index_.end()) return sigma[it->second];
      return Word::letter(s);
    });
  }

 private:
  bool match_seq(const Word& pat, std::size_t j, const Word& level, std::size_t k, bool anchored, Assignment& sigma,
                 const std::function<bool(std::size_t)>& cont) const {
    const std::size_t n = level.breadth();
    if (j == pat.breadth()) {
      if (anchored && k != n) return true;
      return cont(k);
    }
    const Factor& p = pat[j];
    if (p.is_letter()) {
      auto it = index_.find(p.symbol());
      if (it != index_.end()) {
        const std::size_t v = it->second;
        const bool last = anchored && j + 1 == pat.breadth();
        std::size_t lo = nonunit_ ? k + 1 : k;
        if (last) lo = std::max(lo, n);
        for (std::size_t e = lo; e <= n; ++e) {
          sigma[v] = level.slice(k, e);
          if (!match_seq(pat, j + 1, level, e, anchored, sigma, cont)) return false;
        }
        sigma[v] = Word();
        return true;
      }
      if (k >= n || !level[k].is_letter() || level[k].symbol() != p.symbol()) return true;
      return match_seq(pat, j + 1, level, k + 1, anchored, sigma, cont);
    }
    if (k >= n || !level[k].is_bracket()) return true;
    std::function<bool(std::size_t)> after = [&](std::size_t) {
      return match_seq(pat, j + 1, level, k + 1, anchored, sigma, cont);
    };
    return match_seq(p.inner(), 0, level[k].inner(), 0, true, sigma, after);
  }

  Word pattern_;
  std::vector<Symbol> variables_;
  std::unordered_map<Symbol, std::size_t, SymbolHash> index_;
  bool nonunit_ = false;
};

struct SchemaMatch {
  Context context;
  Assignment sigma;
};

/// Every (q, σ) with q|_{pattern σ} = w, leftmost-outermost, longer segments
/// first at each start. A match of the empty segment (all variables 1 and no
/// letters or brackets) is excluded.
inline std::vector<SchemaMatch> schema_occurrences(const Word& w, const Schema& schema) {
  std::vector<SchemaMatch> out;
  visit_starts(w, [&](const std::vector<std::size_t>& path, const Word& level, std::size_t i) {
    std::vector<std::pair<std::size_t, Assignment>> found;
    schema.match_at(level, i, [&](std::size_t end, const Assignment& sigma) {
      if (end > i) found.emplace_back(end, sigma);
      return true;
    });
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [end, sigma] : found) out.push_back({context_at(w, Position{path, i, end}), std::move(sigma)});
    return true;
  });
  return out;
}

}  // namespace opalg
