#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "opalg/context.hpp"
#include "opalg/symbol.hpp"
#include "opalg/word.hpp"

namespace opalg {

/// Upper bounds on z-degree and op-degree.
struct Bounds {
  std::size_t z_degree = 0;
  std::size_t op_degree = 0;

  bool admits(const Word& w) const { return w.z_degree() <= z_degree && w.op_degree() <= op_degree; }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Exhaustive generator of words over a finite letter list, memoized by
/// exact (z-degree, op-degree).
class WordEnumerator {
 public:
  explicit WordEnumerator(std::vector<Symbol> letters) : letters_(std::move(letters)) {}

  /// All words with exactly this z-degree and op-degree.
  const std::vector<Word>& exact(std::size_t z, std::size_t o) {
    auto key = std::make_pair(z, o);
    if (auto it = words_.find(key); it != words_.end()) return it->second;
    std::vector<Word> out;
    if (z == 0 && o == 0) out.push_back(Word());
    // first factor with (fz, fo), then any word for the rest
    for (std::size_t fz = 0; fz <= z; ++fz)
      for (std::size_t fo = 0; fo <= o; ++fo) {
        if (fz == 0 && fo == 0) continue;
        const auto& first = factors(fz, fo);
        if (first.empty()) continue;
        const auto& rest = exact(z - fz, o - fo);
        for (const auto& f : first)
          for (const auto& r : rest) {
            std::vector<Factor> fs;
            fs.reserve(1 + r.breadth());
            fs.push_back(f);
            fs.insert(fs.end(), r.factors().begin(), r.factors().end());
            out.emplace_back(std::move(fs));
          }
      }
    return words_.emplace(key, std::move(out)).first->second;
  }

  /// All words within bounds, ordered by z-degree, then op-degree.
  std::vector<Word> within(const Bounds& b) {
    std::vector<Word> out;
    for (std::size_t z = 0; z <= b.z_degree; ++z)
      for (std::size_t o = 0; o <= b.op_degree; ++o) {
        const auto& ws = exact(z, o);
        out.insert(out.end(), ws.begin(), ws.end());
      }
    return out;
  }

  /// All words within bounds that are not the unit.
  std::vector<Word> nonunit_within(const Bounds& b) {
    auto out = within(b);
    out.erase(out.begin());
    return out;
  }

  const std::vector<Symbol>& letters() const noexcept { return letters_; }

 private:
  const std::vector<Factor>& factors(std::size_t z, std::size_t o) {
    auto key = std::make_pair(z, o);
    if (auto it = factors_.find(key); it != factors_.end()) return it->second;
    std::vector<Factor> out;
    if (o == 0) {
      if (z == 1)
        for (Symbol s : letters_) out.push_back(Factor::letter(s));
    } else {
      for (const auto& w : exact(z, o - 1)) out.push_back(Factor::bracket(w));
    }
    return factors_.emplace(key, std::move(out)).first->second;
  }

  std::vector<Symbol> letters_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>> words_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Factor>> factors_;
};

/// All contexts whose non-hole part lies within bounds.
inline std::vector<Context> contexts_within(const std::vector<Symbol>& letters, const Bounds& b) {
  auto extended = letters;
  extended.push_back(Symbol::hole());
  WordEnumerator e(extended);
  std::vector<Context> out;
  for (std::size_t z = 1; z <= b.z_degree + 1; ++z)
    for (std::size_t o = 0; o <= b.op_degree; ++o)
      for (const auto& w : e.exact(z, o))
        if (w.holes() == 1) out.emplace_back(w);
  return out;
}

}  // namespace opalg
