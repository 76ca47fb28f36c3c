#pragma once

#include <compare>
#include <cstddef>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "opalg/error.hpp"

namespace opalg {

namespace detail {

struct SymbolData {
  std::string name;
  std::size_t hash;
};

// Process-wide interner. Entries are never freed, so SymbolData addresses are
// stable and reads need no locking.
class SymbolTable {
 public:
  static SymbolTable& instance() {
    static SymbolTable table;
    return table;
  }

  const SymbolData* intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    auto& data = storage_.emplace_back(SymbolData{std::string(name), std::hash<std::string_view>{}(name)});
    index_.emplace(data.name, &data);
    return &data;
  }

 private:
  std::mutex mutex_;
  std::deque<SymbolData> storage_;
  std::unordered_map<std::string, const SymbolData*> index_;
};

}  // namespace detail

/// An interned identifier: a letter of Z, an OPI variable, or the context hole.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name) : data_(detail::SymbolTable::instance().intern(name)) {}

  /// The reserved hole symbol, written "@" in text.
  static Symbol hole() {
    static const Symbol h("@");
    return h;
  }

  bool valid() const noexcept { return data_ != nullptr; }
  const std::string& name() const noexcept { return data_->name; }
  std::size_t hash() const noexcept { return data_ ? data_->hash : 0; }
  bool is_hole() const noexcept { return *this == hole(); }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.data_ == b.data_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept {
    if (a.data_ == b.data_) return std::strong_ordering::equal;
    return a.name().compare(b.name()) <=> 0;
  }

 private:
  const detail::SymbolData* data_ = nullptr;
};

struct SymbolHash {
  std::size_t operator()(Symbol s) const noexcept { return s.hash(); }
};

inline bool is_identifier(std::string_view s) {
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (s.empty() || !alpha(s.front())) return false;
  for (char c : s.substr(1))
    if (!alpha(c) && !digit(c) && c != '_') return false;
  return true;
}

/// Reserved OPI variable names: x1, x2, ...
inline bool is_variable_name(std::string_view s) {
  if (s.size() < 2 || s.front() != 'x') return false;
  for (char c : s.substr(1))
    if (c < '0' || c > '9') return false;
  return s[1] != '0';
}

/// A declared, totally ordered letter set Z. A default-constructed alphabet is
/// "open": it accepts any identifier and ranks nothing.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<Symbol> letters) : letters_(std::move(letters)), finite_(true) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (!is_identifier(letters_[i].name()))
        throw InvalidArgument("invalid letter name '" + letters_[i].name() + "'");
      if (!rank_.emplace(letters_[i], i).second)
        throw InvalidArgument("duplicate letter '" + letters_[i].name() + "'");
    }
  }

  /// Comma-separated list, e.g. "z1,z2". Order of appearance is the base order.
  static Alphabet parse(std::string_view csv) {
    std::vector<Symbol> letters;
    std::size_t start = 0;
    while (start <= csv.size()) {
      auto comma = csv.find(',', start);
      auto item = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (item.empty()) throw InvalidArgument("empty letter in alphabet '" + std::string(csv) + "'");
      letters.emplace_back(item);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return Alphabet(std::move(letters));
  }

  bool finite() const noexcept { return finite_; }
  const std::vector<Symbol>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  bool contains(Symbol s) const { return !finite_ || rank_.count(s) != 0; }

  std::optional<std::size_t> rank(Symbol s) const {
    if (auto it = rank_.find(s); it != rank_.end()) return it->second;
    return std::nullopt;
  }

 private:
  std::vector<Symbol> letters_;
  std::unordered_map<Symbol, std::size_t, SymbolHash> rank_;
  bool finite_ = false;
};

}  // namespace opalg

template <>
struct std::hash<opalg::Symbol> {
  std::size_t operator()(opalg::Symbol s) const noexcept { return s.hash(); }
};
