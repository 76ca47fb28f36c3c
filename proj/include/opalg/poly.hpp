#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opalg/context.hpp"
#include "opalg/error.hpp"
#include "opalg/order.hpp"
#include "opalg/rational.hpp"
#include "opalg/word.hpp"

namespace opalg {

using Term = std::pair<Word, Rational>;

/// An operated polynomial: a finitely supported map from words to nonzero
/// rationals, stored sorted by the structural word order.
class OPoly {
 public:
  OPoly() = default;
  OPoly(const Word& w) : terms_{{w, Rational(1)}} {}  // NOLINT: words embed as monomials
  OPoly(const Word& w, const Rational& c) {
    if (c != 0) terms_.emplace_back(w, c);
  }
  static OPoly constant(const Rational& c) { return OPoly(Word(), c); }

  /// Builds from arbitrary terms, combining duplicates and dropping zeros.
  static OPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return structural_compare(a.first, b.first) < 0; });
    OPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    }
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit()); }

  Rational coefficient(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& x) { return structural_compare(t.first, x) < 0; });
    if (it != terms_.end() && it->first == w) return it->second;
    return Rational(0);
  }

  OPoly operator-() const {
    OPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend OPoly operator+(const OPoly& a, const OPoly& b) { return merge(a, b, Rational(1)); }
  friend OPoly operator-(const OPoly& a, const OPoly& b) { return merge(a, b, Rational(-1)); }
  OPoly& operator+=(const OPoly& b) { return *this = merge(*this, b, Rational(1)); }
  OPoly& operator-=(const OPoly& b) { return *this = merge(*this, b, Rational(-1)); }

  friend OPoly operator*(const Rational& c, const OPoly& a) {
    if (c == 0) return OPoly();
    OPoly r = a;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  friend OPoly operator*(const OPoly& a, const OPoly& b) {
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.emplace_back(wa * wb, ca * cb);
    return from_terms(std::move(out));
  }
  OPoly& operator*=(const OPoly& b) { return *this = *this * b; }

  friend bool operator==(const OPoly& a, const OPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second) return false;
    return true;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0x7f4a7c15ULL;
    for (const auto& [w, c] : terms_) {
      h = detail::mix(h, w.hash());
      h = detail::mix(h, std::hash<std::string>{}(c.get_str()));
    }
    return h;
  }

 private:
  static OPoly merge(const OPoly& a, const OPoly& b, const Rational& sb) {
    OPoly r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size())
        c = 1;
      else if (j == b.terms_.size())
        c = -1;
      else {
        auto o = structural_compare(a.terms_[i].first, b.terms_[j].first);
        c = o < 0 ? -1 : (o > 0 ? 1 : 0);
      }
      if (c < 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c > 0) {
        r.terms_.emplace_back(b.terms_[j].first, sb * b.terms_[j].second);
        ++j;
      } else {
        Rational s = a.terms_[i].second + sb * b.terms_[j].second;
        if (s != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

/// Linear extension of u -> [u].
inline OPoly apply_bracket(const OPoly& f) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& [w, c] : f.terms()) out.emplace_back(Word::bracket(w), c);
  return OPoly::from_terms(std::move(out));
}

/// Linear extension of q|_u in the second argument.
inline OPoly substitute(const Context& q, const OPoly& f) {
  Position hole = q.hole_position();
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& [w, c] : f.terms()) out.emplace_back(replace_at(q.word(), hole, w), c);
  return OPoly::from_terms(std::move(out));
}

/// Leading monomial and coefficient. Constants, including 0, lead with 1.
inline Term leading(const OPoly& f, const OrderSpec& order) {
  if (f.is_constant()) return {Word(), f.is_zero() ? Rational(0) : f.terms()[0].second};
  const Term* best = &f.terms()[0];
  for (const auto& t : f.terms())
    if (order.less(best->first, t.first)) best = &t;
  return *best;
}

inline OPoly monicize(const OPoly& f, const OrderSpec& order) {
  if (f.is_zero()) throw InvalidArgument("cannot monicize the zero polynomial");
  Rational c = leading(f, order).second;
  if (c == 1) return f;
  return Rational(1 / c) * f;
}

/// Terms in descending order under `order`.
inline std::vector<Term> sorted_terms(const OPoly& f, const OrderSpec& order) {
  auto terms = f.terms();
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order.less(b.first, a.first); });
  return terms;
}

namespace detail {

inline std::string render_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (w.is_unit()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      render_to(w, out);
    }
  }
  return out;
}

}  // namespace detail

/// Renders terms in descending order of `order`: "3*[z1] - z1*z2 + 1".
inline std::string to_string(const OPoly& f, const OrderSpec& order) { return detail::render_terms(sorted_terms(f, order)); }

/// Renders terms in descending structural order.
inline std::string to_string(const OPoly& f) {
  std::vector<Term> terms(f.terms().rbegin(), f.terms().rend());
  return detail::render_terms(terms);
}

/// Parses "c*w + ... - c*w". Coefficients are rational literals and may be
/// omitted; a bare rational is a constant term; "0" is the zero polynomial.
inline OPoly parse_poly(std::string_view text, const Alphabet& alphabet = Alphabet()) {
  detail::Cursor cur(text, alphabet, false);
  std::vector<Term> terms;
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  bool first = true;
  while (true) {
    Rational sign(1);
    char c = cur.peek();
    if (c == '+' || c == '-') {
      if (c == '-') sign = -1;
      cur.advance();
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    c = cur.peek();
    if (digit(c)) {
      std::size_t start = cur.pos();
      while (cur.pos() < text.size() && digit(text[cur.pos()])) cur.advance();
      if (cur.pos() < text.size() && text[cur.pos()] == '/') {
        cur.advance();
        if (cur.pos() >= text.size() || !digit(text[cur.pos()])) cur.fail("expected denominator digits");
        while (cur.pos() < text.size() && digit(text[cur.pos()])) cur.advance();
      }
      Rational coeff;
      try {
        coeff = parse_rational(text.substr(start, cur.pos() - start));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), start);
      }
      Word w;
      if (cur.peek() == '*') {
        cur.advance();
        w = cur.word();
      }
      terms.emplace_back(std::move(w), sign * coeff);
    } else {
      terms.emplace_back(cur.word(), sign);
    }
    if (cur.at_end()) break;
  }
  return OPoly::from_terms(std::move(terms));
}

}  // namespace opalg
