#pragma once

// An immutable ordered list of variable names. Polynomials hold a shared
// pointer to one; the listed order is the order used by exponent vectors and
// by the lexicographic term order.

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hesskit/error.hpp"

namespace hesskit {

inline bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto head = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(name[0])) return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!tail(name[i])) return false;
  }
  return true;
}

class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!is_identifier(names_[i])) {
        throw Error("bad variable name: '" + names_[i] + "'");
      }
      if (!index_.emplace(names_[i], i).second) {
        throw Error("duplicate variable name: '" + names_[i] + "'");
      }
    }
  }

  static VarSetPtr make(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_or_throw(const std::string& name) const {
    auto i = index(name);
    if (!i) throw Error("unknown variable: '" + name + "'");
    return *i;
  }

  bool operator==(const VarSet& o) const { return names_ == o.names_; }
  bool operator!=(const VarSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

inline void require_same_vars(const VarSetPtr& a, const VarSetPtr& b) {
  if (!same_vars(a, b)) throw Error("variable-set mismatch");
}

}  // namespace hesskit
