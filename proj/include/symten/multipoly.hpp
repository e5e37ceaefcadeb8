#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symten/errors.hpp"
#include "symten/monomial.hpp"
#include "symten/rational.hpp"

namespace symten {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed variable set. Zero coefficients are never stored; equality is term
/// map equality. Terms iterate graded-lex ascending (print order reverses).
class MultiPoly {
public:
  using TermMap = std::map<Monomial, Rational>;

  explicit MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static MultiPoly zero(VarSetPtr vars) { return MultiPoly(std::move(vars)); }

  static MultiPoly constant(VarSetPtr vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_[Monomial::one()] = c;
    return p;
  }

  static MultiPoly from_monomial(VarSetPtr vars, Monomial m, const Rational& c = 1) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
  }

  static MultiPoly variable(VarSetPtr vars, std::uint32_t index) {
    if (index >= vars->size()) throw input_error("variable index out of range");
    return from_monomial(std::move(vars), Monomial::variable(index));
  }

  const VarSetPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  Rational constant_value() const {
    if (!is_constant()) throw input_error("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  bool all_integer_coefficients() const {
    for (const auto& [m, c] : terms_)
      if (!is_integer(c)) return false;
    return true;
  }

  std::uint64_t total_degree() const {
    // grlex max term carries the maximal degree
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
  }

  // grlex-leading term; polynomial must be nonzero
  const std::pair<const Monomial, Rational>& leading_term() const {
    if (terms_.empty()) throw input_error("zero polynomial has no leading term");
    return *terms_.rbegin();
  }

  Rational coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly& operator+=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }
  MultiPoly operator+(const MultiPoly& other) const {
    MultiPoly out = *this;
    return out += other;
  }
  MultiPoly operator-(const MultiPoly& other) const {
    MultiPoly out = *this;
    return out -= other;
  }
  MultiPoly operator-() const {
    MultiPoly out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  MultiPoly operator*(const MultiPoly& other) const {
    check_compatible(other);
    MultiPoly out(vars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

  MultiPoly operator*(const Rational& c) const {
    MultiPoly out(vars_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
  }
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

  MultiPoly pow(std::uint32_t k) const {
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k > 0) base *= base;
    }
    return result;
  }

  bool operator==(const MultiPoly& other) const {
    return vars_->compatible_with(*other.vars_) && terms_ == other.terms_;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_->size())
      throw input_error("evaluation point arity mismatch");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (const auto& [var, exp] : m.factors())
        for (std::uint32_t i = 0; i < exp; ++i) v *= point[var];
      total += v;
    }
    return total;
  }

  /// Ring homomorphism determined by images of the variables. All images must
  /// share one target variable set.
  MultiPoly substitute(const VarSetPtr& target,
                       const std::function<MultiPoly(std::uint32_t)>& image) const {
    MultiPoly out(target);
    for (const auto& [m, c] : terms_) {
      MultiPoly term = MultiPoly::constant(target, c);
      for (const auto& [var, exp] : m.factors()) term *= image(var).pow(exp);
      out += term;
    }
    return out;
  }

  // exchange two variables (used for symmetry checks)
  MultiPoly swap_variables(std::uint32_t a, std::uint32_t b) const {
    std::vector<std::uint32_t> perm(vars_->size());
    for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::swap(perm.at(a), perm.at(b));
    MultiPoly out(vars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.rename(perm), c);
    return out;
  }

  /// Canonical text form: terms graded-lex descending, integer or p/q
  /// coefficients, declared variable names.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (m.is_one())
        out += symten::to_string(mag);
      else {
        if (mag != 1) out += symten::to_string(mag) + "*";
        out += m.to_string(*vars_);
      }
    }
    return out;
  }

private:
  void check_compatible(const MultiPoly& other) const {
    if (!vars_->compatible_with(*other.vars_))
      throw input_error("polynomial arithmetic across different variable sets: " +
                        vars_->id() + " vs " + other.vars_->id());
  }

  VarSetPtr vars_;
  TermMap terms_;
};

inline MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
inline MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b) { return a - b; }
inline MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

} // namespace symten
