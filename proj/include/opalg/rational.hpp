#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "opalg/error.hpp"

namespace opalg {

/// Exact arbitrary-precision rational. Always kept canonical.
using Rational = mpq_class;

/// Parses "3", "-2/5", "+7". Denominators must be nonzero.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  auto bad = [&] { return InvalidArgument("invalid rational literal '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = (s.front() == '-') ? 1 : 0;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw bad();
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) throw bad();
  Rational r;
  if (r.set_str(s, 10) != 0) throw bad();
  if (r.get_den() == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace opalg
