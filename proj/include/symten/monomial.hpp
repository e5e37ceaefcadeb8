#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "symten/errors.hpp"
#include "symten/rational.hpp"

namespace symten {

/// A named, ordered set of commuting variables. Polynomials over different
/// variable sets never mix; compatibility is decided by the set's id and size.
class VarSet {
public:
  VarSet(std::string id, std::vector<std::string> names)
      : id_(std::move(id)), names_(std::move(names)) {}

  const std::string& id() const { return id_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }

  bool compatible_with(const VarSet& other) const {
    return id_ == other.id_ && names_.size() == other.names_.size();
  }

  // index of a declared name, or npos
  std::size_t index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? npos : static_cast<std::size_t>(it - names_.begin());
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::string id_;
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::string id, std::vector<std::string> names) {
  return std::make_shared<VarSet>(std::move(id), std::move(names));
}

// "y1".."yN" style set
inline VarSetPtr make_indexed_varset(const std::string& stem, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
  return make_varset(stem, std::move(names));
}

/// Power product of variables, stored sparsely: (variable index, exponent)
/// pairs sorted by index, zero exponents never stored. Ordered graded-lex:
/// total degree first, then lexicographically with x0 > x1 > ... .
class Monomial {
public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;

  // factors need not be sorted; zero exponents are dropped
  explicit Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    for (const auto& [var, exp] : factors) {
      if (exp == 0) continue;
      if (!factors_.empty() && factors_.back().first == var)
        throw input_error("duplicate variable in monomial factor list");
      factors_.emplace_back(var, exp);
    }
  }

  static Monomial one() { return Monomial(); }

  static Monomial variable(std::uint32_t index, std::uint32_t exp = 1) {
    Monomial m;
    if (exp > 0) m.factors_.emplace_back(index, exp);
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [var, exp] : factors_) d += exp;
    return d;
  }

  std::uint32_t exponent_of(std::uint32_t var) const {
    for (const auto& [v, e] : factors_)
      if (v == var) return e;
    return 0;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial out;
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
      if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first))
        out.factors_.push_back(*a++);
      else if (a == factors_.end() || b->first < a->first)
        out.factors_.push_back(*b++);
      else {
        out.factors_.emplace_back(a->first, a->second + b->second);
        ++a, ++b;
      }
    }
    return out;
  }

  // all exponents scaled by k (k = 0 gives 1)
  Monomial pow(std::uint32_t k) const {
    Monomial out;
    if (k == 0) return out;
    out.factors_ = factors_;
    for (auto& [var, exp] : out.factors_) exp *= k;
    return out;
  }

  // apply a variable permutation/renaming (indices into the same or another set)
  Monomial rename(const std::vector<std::uint32_t>& new_index) const {
    std::vector<Factor> factors;
    factors.reserve(factors_.size());
    for (const auto& [var, exp] : factors_) factors.emplace_back(new_index.at(var), exp);
    return Monomial(std::move(factors));
  }

  // graded-lex: higher total degree wins; on ties the first variable (lowest
  // index) where exponents differ decides, larger exponent first
  std::strong_ordering operator<=>(const Monomial& other) const {
    const auto da = total_degree(), db = other.total_degree();
    if (da != db) return da <=> db;
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
      if (a->first != b->first)
        // the one owning the smaller variable index has positive exponent there
        return a->first < b->first ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
      if (a->second != b->second)
        return a->second > b->second ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
      ++a, ++b;
    }
    if (a != factors_.end()) return std::strong_ordering::greater;
    if (b != other.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }
  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

  std::string to_string(const VarSet& vars) const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [var, exp] : factors_) {
      if (!out.empty()) out += "*";
      out += vars.name(var);
      if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
  }

private:
  std::vector<Factor> factors_;
};

} // namespace symten
