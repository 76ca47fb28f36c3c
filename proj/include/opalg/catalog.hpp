#pragma once

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "opalg/error.hpp"
#include "opalg/opi.hpp"
#include "opalg/order.hpp"
#include "opalg/poly.hpp"
#include "opalg/rational.hpp"

namespace opalg {

/// A resolved catalog selector: the identities, the order preset they are
/// meant to be used with, and whether that preset actually produces the
/// expected leading monomials for these parameters.
struct CatalogEntry {
  std::string selector;
  std::string family;  // rb, diff, diffprime, averaging, reynolds
  int item = 0;
  std::map<std::string, Rational> params;
  std::vector<Opi> opis;
  Preset declared_order = Preset::db;
  std::vector<Word> expected_leads;
  bool supported = false;
};

namespace detail {

inline OPoly P(std::string_view text) { return parse_poly(text); }

inline std::map<std::string, Rational> parse_params(std::string_view query, const std::set<std::string>& allowed,
                                                    bool allow_lij, const std::string& selector) {
  std::map<std::string, Rational> params;
  std::size_t start = 0;
  while (start < query.size()) {
    auto comma = query.find(',', start);
    auto item = query.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("parameter '" + std::string(item) + "' in '" + selector + "' needs a value");
    std::string key(item.substr(0, eq));
    bool lij = allow_lij && key.size() == 3 && key[0] == 'l' && std::isdigit(static_cast<unsigned char>(key[1])) &&
               std::isdigit(static_cast<unsigned char>(key[2]));
    if (!allowed.count(key) && !lij) throw InvalidArgument("unknown parameter '" + key + "' in '" + selector + "'");
    params[key] = parse_rational(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return params;
}

inline Rational param(const std::map<std::string, Rational>& p, const std::string& key) {
  auto it = p.find(key);
  return it == p.end() ? Rational(0) : it->second;
}

inline OPoly bracket_power_product(int i, int j) {
  OPoly one_b = P("[1]");
  OPoly out = OPoly::constant(1);
  for (int k = 0; k < i; ++k) out *= one_b;
  out *= P("x1*x2");
  for (int k = 0; k < j; ++k) out *= one_b;
  return out;
}

inline OPoly rb_operand(int item, const Rational& lambda, const Rational& c) {
  OPoly xy = P("x1*x2");
  switch (item) {
    case 1: return P("x1*[x2]");
    case 2: return P("[x1]*x2");
    case 3: return P("x1*[x2] + x2*[x1]");
    case 4: return P("[x1]*x2 + [x2]*x1");
    case 5: return P("x1*[x2] + [x1]*x2 - [x1*x2]");
    case 6: return P("x1*[x2] + [x1]*x2") + lambda * xy;
    case 7: return P("x1*[x2] - x1*[1]*x2") + lambda * xy;
    case 8: return P("[x1]*x2 - x1*[1]*x2") + lambda * xy;
    case 9: return P("x1*[x2] + [x1]*x2 - x1*[1]*x2") + lambda * xy;
    case 10: return P("x1*[x2] + [x1]*x2 - x1*x2*[1] - x1*[1]*x2") + lambda * xy;
    case 11: return P("x1*[x2] + [x1]*x2 - x1*[1]*x2 - [x1*x2]") + lambda * xy;
    case 12: return P("x1*[x2] + [x1]*x2 - x1*[1]*x2 - [1]*x1*x2") + lambda * xy;
    case 13: return c * P("x1*[1]*x2") + lambda * xy;
    case 14: return c * P("x2*[1]*x1") + lambda * P("x2*x1");
    default: throw InvalidArgument("Rota-Baxter list item must be 1..14, got " + std::to_string(item));
  }
}

inline OPoly diff_operand(int item, const std::map<std::string, Rational>& p) {
  Rational a = param(p, "a"), b = param(p, "b"), c = param(p, "c");
  switch (item) {
    case 1:
      if (a * a != a + b * c) throw InvalidArgument("differential list item 1 requires a^2 = a + b*c");
      return a * P("x1*[x2] + [x1]*x2") + b * P("[x1]*[x2]") + c * P("x1*x2");
    case 2:
      return Rational(a * b * b) * P("x2*x1") + b * P("x1*x2") + a * P("[x2]*[x1]") - Rational(a * b) * P("x2*[x1] + [x2]*x1");
    case 3: {
      OPoly n;
      for (const auto& [key, value] : p)
        if (key.size() == 3 && key[0] == 'l') n += value * bracket_power_product(key[1] - '0', key[2] - '0');
      return n;
    }
    case 4: return P("x1*[x2] + [x1]*x2") + a * P("x1*[1]*x2") + b * P("x1*x2");
    case 5: return P("[x1]*x2") + a * P("x1*[1]*x2 - x1*x2*[1]");
    case 6: return P("x1*[x2]") + a * P("x1*[1]*x2 - [1]*x1*x2");
    default: throw InvalidArgument("differential list item must be 1..6, got " + std::to_string(item));
  }
}

inline std::string canonical_selector(const std::string& head, const std::map<std::string, Rational>& params) {
  std::string s = head;
  bool first = true;
  for (const auto& [k, v] : params) {
    s += first ? "?" : ",";
    first = false;
    s += k + "=" + v.get_str();
  }
  return s;
}

}  // namespace detail

/// The Rota-Baxter shape [x1]*[x2] - [B(x1, x2)].
inline Opi rota_baxter_type(const std::string& name, const OPoly& b) {
  return Opi(name, Opi::standard_variables(2), parse_poly("[x1]*[x2]") - apply_bracket(b));
}

/// The differential shape [x1*x2] - N(x1, x2).
inline Opi differential_type(const std::string& name, const OPoly& n) {
  return Opi(name, Opi::standard_variables(2), parse_poly("[x1*x2]") - n);
}

/// Reynolds identity with k operands:
/// [[x1]...[xk]] - sum_i [[x1]..xi..[xk]] + [x1]...[xk].
inline Opi reynolds_identity(std::size_t k) {
  auto vars = Opi::standard_variables(k);
  auto product = [&](std::size_t bare) {
    Word w;
    for (std::size_t i = 0; i < k; ++i) {
      Word x = Word::letter(vars[i]);
      w = w * (i == bare ? x : Word::bracket(x));
    }
    return w;
  };
  OPoly body = OPoly(Word::bracket(product(k))) + OPoly(product(k));
  for (std::size_t i = 0; i < k; ++i) body -= OPoly(Word::bracket(product(i)));
  return Opi("reynolds" + std::to_string(k), vars, body);
}

/// Resolves selectors such as "rb:6?lambda=1", "nijenhuis",
/// "diff:1?a=1,b=0,c=0", "diff:3?l01=1", "diffprime?c=1", "averaging",
/// "reynolds?n=4". Missing parameters default to 0 (n defaults to 4).
inline CatalogEntry resolve_catalog(std::string_view selector) {
  const std::string sel(selector);
  auto q = selector.find('?');
  std::string_view head = selector.substr(0, q);
  std::string_view query = q == std::string_view::npos ? std::string_view() : selector.substr(q + 1);
  std::string family(head.substr(0, head.find(':')));
  int item = 0;
  if (auto colon = head.find(':'); colon != std::string_view::npos) {
    std::string num(head.substr(colon + 1));
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos || num.size() > 3)
      throw InvalidArgument("invalid item number in '" + sel + "'");
    item = std::stoi(num);
  }

  CatalogEntry e;
  e.family = family;
  e.item = item;
  auto need_item = [&](bool needed) {
    if (needed && item == 0) throw InvalidArgument("'" + family + "' needs an item number, e.g. '" + family + ":1'");
    if (!needed && head.find(':') != std::string_view::npos)
      throw InvalidArgument("'" + family + "' takes no item number");
  };

  if (family == "rb" || family == "nijenhuis") {
    if (family == "nijenhuis") {
      need_item(false);
      e.family = "rb";
      e.item = item = 5;
      e.params = detail::parse_params(query, {}, false, sel);
    } else {
      need_item(true);
      e.params = detail::parse_params(query, {"lambda", "c"}, false, sel);
    }
    OPoly b = detail::rb_operand(item, detail::param(e.params, "lambda"), detail::param(e.params, "c"));
    std::string head_name = family == "nijenhuis" ? "nijenhuis" : "rb:" + std::to_string(item);
    e.selector = detail::canonical_selector(head_name, e.params);
    e.opis.push_back(rota_baxter_type(e.selector, b));
    e.declared_order = Preset::db;
    e.expected_leads.push_back(parse_word("[x1]*[x2]"));
  } else if (family == "diff") {
    need_item(true);
    e.params = detail::parse_params(query, {"a", "b", "c"}, item == 3, sel);
    OPoly n = detail::diff_operand(item, e.params);
    e.selector = detail::canonical_selector("diff:" + std::to_string(item), e.params);
    e.opis.push_back(differential_type(e.selector, n));
    e.declared_order = Preset::dt;
    e.expected_leads.push_back(parse_word("[x1*x2]"));
  } else if (family == "diffprime") {
    need_item(false);
    e.params = detail::parse_params(query, {"c"}, false, sel);
    e.selector = detail::canonical_selector("diffprime", e.params);
    e.opis.emplace_back(e.selector, Opi::standard_variables(1), parse_poly("[x1]") - detail::param(e.params, "c") * parse_poly("x1"));
    e.declared_order = Preset::dt;
    e.expected_leads.push_back(parse_word("[x1]"));
  } else if (family == "averaging") {
    need_item(false);
    e.params = detail::parse_params(query, {}, false, sel);
    e.selector = "averaging";
    e.opis.push_back(Opi::parse("averaging/1", "[[x1]*x2] - [x1]*[x2]"));
    e.opis.push_back(Opi::parse("averaging/2", "[x1*[x2]] - [x1]*[x2]"));
    e.opis.push_back(Opi::parse("averaging/3", "[[x1]]*[x2] - [x1]*[[x2]]"));
    e.declared_order = Preset::dt;
    for (auto w : {"[[x1]*x2]", "[x1*[x2]]", "[[x1]]*[x2]"}) e.expected_leads.push_back(parse_word(w));
  } else if (family == "reynolds") {
    need_item(false);
    e.params = detail::parse_params(query, {"n"}, false, sel);
    if (!e.params.count("n")) e.params["n"] = 4;
    Rational n = e.params["n"];
    if (n.get_den() != 1 || n < 2 || n > 12) throw InvalidArgument("reynolds needs an integer n in 2..12");
    e.selector = detail::canonical_selector("reynolds", e.params);
    for (long k = 2; k <= n.get_num().get_si(); ++k) {
      e.opis.push_back(reynolds_identity(static_cast<std::size_t>(k)));
      Word inner;
      for (const auto& v : Opi::standard_variables(static_cast<std::size_t>(k))) inner = inner * Word::bracket(Word::letter(v));
      e.expected_leads.push_back(Word::bracket(inner));
    }
    e.declared_order = Preset::dt;
  } else {
    throw InvalidArgument("unknown catalog family '" + family +
                          "' (expected rb, nijenhuis, diff, diffprime, averaging, reynolds)");
  }

  OrderSpec order(e.declared_order, Alphabet());
  e.supported = true;
  for (std::size_t i = 0; i < e.opis.size(); ++i)
    if (!(e.opis[i].lead(order) == e.expected_leads[i])) e.supported = false;
  return e;
}

}  // namespace opalg
