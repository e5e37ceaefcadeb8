#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symten/errors.hpp"
#include "symten/exponent_map.hpp"
#include "symten/limits.hpp"
#include "symten/rational.hpp"
#include "symten/sym_element.hpp"
#include "symten/word.hpp"

// Brute-force model of the n-fold tensor power, written to be obviously
// correct rather than fast. It is the independent oracle the orbit-sum
// multiplication is checked against, so nothing here may depend on the
// Product Formula.

namespace symten {

/// Ordered n-tuple of words; empty words mark identity slots.
class TensorWord {
public:
  explicit TensorWord(std::vector<Word> slots) : slots_(std::move(slots)) {
    if (slots_.empty()) throw input_error("tensor word needs at least one slot");
  }

  std::size_t order() const { return slots_.size(); }
  const std::vector<Word>& slots() const { return slots_; }

  // slotwise concatenation
  TensorWord operator*(const TensorWord& other) const {
    if (slots_.size() != other.slots_.size())
      throw input_error("tensor order mismatch");
    std::vector<Word> slots;
    slots.reserve(slots_.size());
    for (std::size_t i = 0; i < slots_.size(); ++i)
      slots.push_back(slots_[i] * other.slots_[i]);
    return TensorWord(std::move(slots));
  }

  TensorWord with_swapped(std::size_t a, std::size_t b) const {
    std::vector<Word> slots = slots_;
    std::swap(slots.at(a), slots.at(b));
    return TensorWord(std::move(slots));
  }

  std::strong_ordering operator<=>(const TensorWord& other) const {
    if (auto cmp = slots_.size() <=> other.slots_.size(); cmp != 0) return cmp;
    for (std::size_t i = 0; i < slots_.size(); ++i)
      if (auto cmp = slots_[i] <=> other.slots_[i]; cmp != 0) return cmp;
    return std::strong_ordering::equal;
  }
  bool operator==(const TensorWord& other) const { return slots_ == other.slots_; }

  std::string to_string() const {
    std::string out;
    for (const auto& w : slots_) {
      if (!out.empty()) out += "⊗";
      out += w.empty() ? "1" : w.to_string();
    }
    return out;
  }

private:
  std::vector<Word> slots_;
};

/// Exact linear combination of tensor words of a fixed order.
class TensorElement {
public:
  using TermMap = std::map<TensorWord, Rational>;

  TensorElement(std::uint32_t order, std::uint32_t alphabet)
      : order_(order), alphabet_(alphabet) {
    if (order_ == 0) throw input_error("tensor order must be >= 1");
  }

  std::uint32_t order() const { return order_; }
  std::uint32_t alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TensorWord& t, const Rational& c) {
    if (c == 0) return;
    if (t.order() != order_) throw input_error("tensor order mismatch");
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& other) {
    check_same_space(other);
    for (const auto& [t, c] : other.terms_) add_term(t, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& other) {
    check_same_space(other);
    for (const auto& [t, c] : other.terms_) add_term(t, -c);
    return *this;
  }
  TensorElement operator*(const Rational& c) const {
    TensorElement out(order_, alphabet_);
    if (c == 0) return out;
    for (const auto& [t, coeff] : terms_) out.terms_.emplace(t, coeff * c);
    return out;
  }

  bool operator==(const TensorElement& other) const {
    return order_ == other.order_ && alphabet_ == other.alphabet_ &&
           terms_ == other.terms_;
  }

  /// Invariance under all slot permutations; adjacent transpositions suffice
  /// since they generate the symmetric group.
  bool is_symmetric() const {
    for (std::uint32_t i = 0; i + 1 < order_; ++i)
      for (const auto& [t, c] : terms_) {
        auto it = terms_.find(t.with_swapped(i, i + 1));
        if (it == terms_.end() || it->second != c) return false;
      }
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : terms_) {
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (mag != 1) out += symten::to_string(mag) + "*";
      out += t.to_string();
    }
    return out;
  }

private:
  void check_same_space(const TensorElement& other) const {
    if (order_ != other.order_ || alphabet_ != other.alphabet_)
      throw input_error("tensor spaces differ");
  }

  std::uint32_t order_;
  std::uint32_t alphabet_;
  TermMap terms_;
};

/// Orbit sum of word^alpha slots padded with identity slots: every distinct
/// arrangement appears exactly once with coefficient 1 (orbit sum, not
/// symmetrization, so coefficients stay integral).
inline TensorElement orbit_expand(const ExponentMap& alpha, std::uint32_t n,
                                  const Limits& limits = {}) {
  if (n > limits.max_tensor_order)
    throw resource_error("tensor order above the oracle cap of " +
                         std::to_string(limits.max_tensor_order));
  if (alpha.weight() > n)
    throw input_error("exponent map weight exceeds the tensor order");

  std::vector<Word> slots;
  for (const auto& [word, exp] : alpha.entries())
    for (std::uint32_t i = 0; i < exp; ++i) slots.push_back(word);
  while (slots.size() < n) slots.emplace_back(alpha.alphabet());
  std::sort(slots.begin(), slots.end());

  TensorElement out(n, alpha.alphabet());
  std::size_t count = 0;
  do {
    if (++count > limits.max_tensor_terms)
      throw resource_error("tensor term count above the oracle cap");
    out.add_term(TensorWord(slots), 1);
  } while (std::next_permutation(slots.begin(), slots.end()));
  return out;
}

/// Bilinear slotwise product.
inline TensorElement tensor_mul(const TensorElement& a, const TensorElement& b,
                                const Limits& limits = {}) {
  if (a.order() != b.order()) throw input_error("tensor order mismatch");
  if (a.alphabet() != b.alphabet()) throw input_error("alphabet mismatch");
  if (a.terms().size() * b.terms().size() > limits.max_tensor_terms)
    throw resource_error("tensor product size above the oracle cap");
  TensorElement out(a.order(), a.alphabet());
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) out.add_term(ta * tb, ca * cb);
  return out;
}

/// Unique coordinates of a symmetric tensor in the orbit-sum basis. Each step
/// removes one full orbit, so the loop runs once per basis element present.
inline SymElement project_to_basis(const TensorElement& t, const Limits& limits = {}) {
  if (!t.is_symmetric()) throw input_error("not an invariant tensor");
  const std::uint32_t n = t.order();
  SymElement out(Mode::truncated(n), t.alphabet());

  TensorElement rest = t;
  while (!rest.is_zero()) {
    const auto& [tuple, c] = *rest.terms().begin();
    std::vector<ExponentMap::Entry> entries;
    for (const auto& w : tuple.slots()) {
      if (w.empty()) continue;
      bool merged = false;
      for (auto& [word, exp] : entries)
        if (word == w) {
          ++exp;
          merged = true;
          break;
        }
      if (!merged) entries.emplace_back(w, 1);
    }
    const ExponentMap alpha(t.alphabet(), std::move(entries));
    const Rational coeff = c;
    rest -= orbit_expand(alpha, n, limits) * coeff;
    out.add_term(alpha, coeff);
  }
  return out;
}

} // namespace symten
