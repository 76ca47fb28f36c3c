#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opalg/error.hpp"
#include "opalg/symbol.hpp"

namespace opalg {

struct Measures {
  std::size_t breadth = 0;    // top-level factor count
  std::size_t z_degree = 0;   // letter occurrences at all depths (hole excluded)
  std::size_t op_degree = 0;  // bracket count at all depths
  std::size_t depth = 0;      // maximal bracket nesting
};

namespace detail {
struct WordNode;

inline std::size_t mix(std::size_t h, std::size_t v) noexcept {
  v *= 0x9e3779b97f4a7c15ULL;
  v ^= v >> 29;
  h ^= v + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
  return h;
}
}  // namespace detail

class Factor;

/// An element of the free operated monoid over an alphabet: an immutable
/// sequence of factors. The empty sequence is the unit 1. Words may also
/// contain the hole symbol, which is how contexts are represented.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Factor> factors);

  static Word letter(Symbol s);
  static Word letter(std::string_view name) { return letter(Symbol(name)); }
  static Word bracket(const Word& inner);
  static Word hole() { return letter(Symbol::hole()); }

  bool is_unit() const noexcept { return !node_; }
  std::size_t breadth() const noexcept;
  const Measures& measures() const noexcept;
  std::size_t z_degree() const noexcept { return measures().z_degree; }
  std::size_t op_degree() const noexcept { return measures().op_degree; }
  std::size_t holes() const noexcept;
  std::size_t hash() const noexcept;

  const std::vector<Factor>& factors() const noexcept;
  const Factor& operator[](std::size_t i) const;

  /// Top-level factors [begin, end).
  Word slice(std::size_t begin, std::size_t end) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) noexcept;

 private:
  std::shared_ptr<const detail::WordNode> node_;
};

/// One factor of a word: a letter or a bracketed word.
class Factor {
 public:
  static Factor letter(Symbol s) {
    Factor f;
    f.symbol_ = s;
    f.hash_ = detail::mix(0x1234567ULL, s.hash());
    return f;
  }
  static Factor bracket(Word inner) {
    Factor f;
    f.bracket_ = true;
    f.hash_ = detail::mix(0xabcdef987ULL, inner.hash());
    f.inner_ = std::move(inner);
    return f;
  }

  bool is_letter() const noexcept { return !bracket_; }
  bool is_bracket() const noexcept { return bracket_; }
  Symbol symbol() const noexcept { return symbol_; }
  const Word& inner() const noexcept { return inner_; }
  std::size_t hash() const noexcept { return hash_; }

 private:
  Factor() = default;
  Symbol symbol_;
  Word inner_;
  std::size_t hash_ = 0;
  bool bracket_ = false;
};

namespace detail {
struct WordNode {
  std::vector<Factor> factors;
  Measures measures;
  std::size_t holes = 0;
  std::size_t hash = 0;
};
}  // namespace detail

inline Word::Word(std::vector<Factor> factors) {
  if (factors.empty()) return;
  auto node = std::make_shared<detail::WordNode>();
  node->factors = std::move(factors);
  node->measures.breadth = node->factors.size();
  std::size_t h = 0x51ed270b27a3c5d1ULL;
  for (const auto& f : node->factors) {
    if (f.is_letter()) {
      if (f.symbol().is_hole())
        ++node->holes;
      else
        ++node->measures.z_degree;
    } else {
      const auto& m = f.inner().measures();
      node->measures.z_degree += m.z_degree;
      node->measures.op_degree += m.op_degree + 1;
      node->measures.depth = std::max(node->measures.depth, m.depth + 1);
      node->holes += f.inner().holes();
    }
    h = detail::mix(h, f.hash());
  }
  node->hash = h;
  node_ = std::move(node);
}

inline Word Word::letter(Symbol s) { return Word({Factor::letter(s)}); }
inline Word Word::bracket(const Word& inner) { return Word({Factor::bracket(inner)}); }

inline std::size_t Word::breadth() const noexcept { return node_ ? node_->factors.size() : 0; }
inline const Measures& Word::measures() const noexcept {
  static const Measures unit{};
  return node_ ? node_->measures : unit;
}
inline std::size_t Word::holes() const noexcept { return node_ ? node_->holes : 0; }
inline std::size_t Word::hash() const noexcept { return node_ ? node_->hash : 0; }
inline const std::vector<Factor>& Word::factors() const noexcept {
  static const std::vector<Factor> none;
  return node_ ? node_->factors : none;
}
inline const Factor& Word::operator[](std::size_t i) const { return node_->factors[i]; }

inline Word Word::slice(std::size_t begin, std::size_t end) const {
  if (begin == 0 && end == breadth()) return *this;
  const auto& f = factors();
  return Word(std::vector<Factor>(f.begin() + static_cast<std::ptrdiff_t>(begin),
                                  f.begin() + static_cast<std::ptrdiff_t>(end)));
}

inline Word operator*(const Word& a, const Word& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Factor> f;
  f.reserve(a.breadth() + b.breadth());
  f.insert(f.end(), a.factors().begin(), a.factors().end());
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return Word(std::move(f));
}

inline bool operator==(const Word& a, const Word& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash) return false;
  const auto& fa = a.node_->factors;
  const auto& fb = b.node_->factors;
  if (fa.size() != fb.size()) return false;
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (fa[i].is_letter() != fb[i].is_letter()) return false;
    if (fa[i].is_letter() ? fa[i].symbol() != fb[i].symbol() : !(fa[i].inner() == fb[i].inner()))
      return false;
  }
  return true;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return w.hash(); }
};

/// Deterministic structural total order used for storage: z-degree,
/// op-degree, breadth, then factor-wise with letter < bracket and letters by
/// name. Independent of any monomial order.
inline std::strong_ordering structural_compare(const Word& a, const Word& b) {
  if (a == b) return std::strong_ordering::equal;
  const auto& ma = a.measures();
  const auto& mb = b.measures();
  if (auto c = ma.z_degree <=> mb.z_degree; c != 0) return c;
  if (auto c = ma.op_degree <=> mb.op_degree; c != 0) return c;
  if (auto c = a.holes() <=> b.holes(); c != 0) return c;
  if (auto c = ma.breadth <=> mb.breadth; c != 0) return c;
  for (std::size_t i = 0; i < ma.breadth; ++i) {
    const Factor& fa = a[i];
    const Factor& fb = b[i];
    if (fa.is_letter() != fb.is_letter()) return fa.is_letter() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (fa.is_letter()) {
      if (auto c = fa.symbol() <=> fb.symbol(); c != 0) return c;
    } else if (auto c = structural_compare(fa.inner(), fb.inner()); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

struct StructuralLess {
  bool operator()(const Word& a, const Word& b) const { return structural_compare(a, b) < 0; }
};

inline void render_to(const Word& w, std::string& out) {
  if (w.is_unit()) {
    out += '1';
    return;
  }
  bool first = true;
  for (const auto& f : w.factors()) {
    if (!first) out += '*';
    first = false;
    if (f.is_letter()) {
      out += f.symbol().name();
    } else {
      out += '[';
      render_to(f.inner(), out);
      out += ']';
    }
  }
}

/// Canonical text: "1", "z1*[z2]*z1", "[@]".
inline std::string to_string(const Word& w) {
  std::string s;
  render_to(w, s);
  return s;
}

/// Erases every bracket, keeping letters in order.
inline Word erase_brackets(const Word& w) {
  std::vector<Factor> out;
  std::function<void(const Word&)> walk = [&](const Word& u) {
    for (const auto& f : u.factors()) {
      if (f.is_letter())
        out.push_back(f);
      else
        walk(f.inner());
    }
  };
  walk(w);
  return Word(std::move(out));
}

/// Applies a letter-to-word map to every letter occurrence at every depth.
template <typename Fn>
Word map_letters(const Word& w, Fn&& fn) {
  Word result;
  for (const auto& f : w.factors()) {
    if (f.is_letter())
      result = result * fn(f.symbol());
    else
      result = result * Word::bracket(map_letters(f.inner(), fn));
  }
  return result;
}

/// Calls fn on every letter occurrence at every depth.
template <typename Fn>
void for_each_letter(const Word& w, Fn&& fn) {
  for (const auto& f : w.factors()) {
    if (f.is_letter())
      fn(f.symbol());
    else
      for_each_letter(f.inner(), fn);
  }
}

namespace detail {

/// Shared recursive-descent cursor for words and polynomials.
class Cursor {
 public:
  Cursor(std::string_view text, const Alphabet& alphabet, bool allow_hole)
      : text_(text), alphabet_(alphabet), allow_hole_(allow_hole) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() const noexcept { return pos_; }
  void advance() { ++pos_; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(what + ", found " + found, pos_);
  }

  static bool ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
  static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '_'; }

  Word word() {
    skip_ws();
    if (peek() == '1') {
      std::size_t start = pos_;
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        pos_ = start;
        fail("expected a word");
      }
      return Word();
    }
    std::vector<Factor> factors;
    factors.push_back(factor());
    while (peek() == '*') {
      ++pos_;
      factors.push_back(factor());
    }
    return Word(std::move(factors));
  }

  Factor factor() {
    char c = peek();
    if (c == '[') {
      ++pos_;
      Word inner = word();
      expect(']');
      return Factor::bracket(std::move(inner));
    }
    if (c == '@') {
      if (!allow_hole_) fail("hole symbol not allowed here");
      if (++holes_ > 1) fail("more than one hole");
      ++pos_;
      return Factor::letter(Symbol::hole());
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      Symbol s(text_.substr(start, pos_ - start));
      if (!alphabet_.contains(s)) throw ParseError("unknown letter '" + s.name() + "'", start);
      return Factor::letter(s);
    }
    fail("expected a letter, '[' or '1'");
  }

  std::string_view text() const noexcept { return text_; }
  std::size_t holes() const noexcept { return holes_; }
  void set_pos(std::size_t p) { pos_ = p; }

 private:
  std::string_view text_;
  const Alphabet& alphabet_;
  bool allow_hole_;
  std::size_t pos_ = 0;
  std::size_t holes_ = 0;
};

}  // namespace detail

/// Parses a word. With a finite alphabet, letters outside it are rejected.
inline Word parse_word(std::string_view text, const Alphabet& alphabet = Alphabet()) {
  detail::Cursor cur(text, alphabet, false);
  Word w = cur.word();
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return w;
}

}  // namespace opalg

template <>
struct std::hash<opalg::Word> {
  std::size_t operator()(const opalg::Word& w) const noexcept { return w.hash(); }
};
