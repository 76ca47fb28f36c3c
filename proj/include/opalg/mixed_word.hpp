#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "opalg/error.hpp"
#include "opalg/symbol.hpp"

namespace opalg {

/// A finite monoid given by a multiplication table over named elements.
class MonoidOracle {
 public:
  /// table[i][j] is the index of elements[i] * elements[j].
  MonoidOracle(std::vector<std::string> elements, std::size_t unit, std::vector<std::vector<std::size_t>> table)
      : elements_(std::move(elements)), unit_(unit), table_(std::move(table)) {
    const std::size_t n = elements_.size();
    if (n == 0) throw InvalidArgument("monoid needs at least one element");
    if (unit_ >= n) throw InvalidArgument("unit index out of range");
    if (table_.size() != n) throw InvalidArgument("multiplication table must be square");
    for (std::size_t i = 0; i < n; ++i) {
      if (!index_.emplace(elements_[i], i).second) throw InvalidArgument("duplicate monoid element '" + elements_[i] + "'");
      if (table_[i].size() != n) throw InvalidArgument("multiplication table must be square");
      for (std::size_t v : table_[i])
        if (v >= n) throw InvalidArgument("multiplication table entry out of range");
    }
    for (std::size_t i = 0; i < n; ++i)
      if (table_[unit_][i] != i || table_[i][unit_] != i)
        throw InvalidArgument("'" + elements_[unit_] + "' is not a two-sided identity for '" + elements_[i] + "'");
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw InvalidArgument("multiplication is not associative on (" + elements_[a] + ", " + elements_[b] + ", " +
                                  elements_[c] + ")");
  }

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t unit() const noexcept { return unit_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }
  const std::string& name(std::size_t i) const { return elements_.at(i); }
  std::size_t index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw InvalidArgument("unknown monoid element '" + name + "'");
    return it->second;
  }

 private:
  std::vector<std::string> elements_;
  std::size_t unit_;
  std::vector<std::vector<std::size_t>> table_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A factor of a mixed word: a monoid element (by index) or a letter.
struct MonoidElement {
  std::size_t index;
  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
};
using MixedFactor = std::variant<MonoidElement, Symbol>;

/// Canonical form a0 t1 a1 ... tn an: adjacent monoid factors are multiplied
/// and unit factors dropped.
inline std::vector<MixedFactor> normalize_mixed_word(const std::vector<MixedFactor>& factors, const MonoidOracle& oracle) {
  std::vector<MixedFactor> out;
  for (const auto& f : factors) {
    if (const auto* m = std::get_if<MonoidElement>(&f)) {
      if (m->index >= oracle.size()) throw InvalidArgument("monoid element index out of range");
      if (!out.empty())
        if (auto* prev = std::get_if<MonoidElement>(&out.back())) {
          prev->index = oracle.mul(prev->index, m->index);
          if (prev->index == oracle.unit()) out.pop_back();
          continue;
        }
      if (m->index != oracle.unit()) out.push_back(f);
    } else {
      out.push_back(f);
    }
  }
  return out;
}

}  // namespace opalg
