#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symten/errors.hpp"
#include "symten/exponent_map.hpp"
#include "symten/limits.hpp"
#include "symten/rational.hpp"
#include "symten/word.hpp"

namespace symten {

/// Where an element lives: the order-n truncated algebra (weights capped at
/// n) or the free object whose basis is all exponent maps.
class Mode {
public:
  static Mode truncated(std::uint32_t n) {
    if (n < 1) throw input_error("truncation order must be >= 1");
    return Mode(n);
  }
  static Mode free() { return Mode(std::nullopt); }

  bool is_free() const { return !n_.has_value(); }
  std::uint32_t order() const {
    if (!n_) throw input_error("free mode has no truncation order");
    return *n_;
  }
  bool admits_weight(std::uint32_t w) const { return !n_ || w <= *n_; }

  bool operator==(const Mode&) const = default;

  std::string to_string() const {
    return n_ ? "truncated(" + std::to_string(*n_) + ")" : "free";
  }

private:
  explicit Mode(std::optional<std::uint32_t> n) : n_(n) {}
  std::optional<std::uint32_t> n_;
};

/// Exact linear combination of orbit-sum basis indices, in truncated or free
/// mode. Zero coefficients are never stored; the identity is the empty
/// exponent map with coefficient 1.
class SymElement {
public:
  using TermMap = std::map<ExponentMap, Rational>;

  SymElement(Mode mode, std::uint32_t alphabet) : mode_(mode), alphabet_(alphabet) {}

  static SymElement zero(Mode mode, std::uint32_t alphabet) {
    return SymElement(mode, alphabet);
  }

  static SymElement identity(Mode mode, std::uint32_t alphabet) {
    SymElement out(mode, alphabet);
    out.terms_[ExponentMap::identity(alphabet)] = 1;
    return out;
  }

  static SymElement basis(Mode mode, const ExponentMap& alpha, const Rational& c = 1) {
    SymElement out(mode, alpha.alphabet());
    if (!mode.admits_weight(alpha.weight()))
      throw input_error("basis index weight exceeds truncation order");
    if (c != 0) out.terms_[alpha] = c;
    return out;
  }

  const Mode& mode() const { return mode_; }
  std::uint32_t alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient_of(const ExponentMap& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const ExponentMap& alpha, const Rational& c) {
    if (c == 0) return;
    if (!mode_.admits_weight(alpha.weight()))
      throw input_error("term weight exceeds truncation order");
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SymElement& operator+=(const SymElement& other) {
    check_same_space(other);
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
    return *this;
  }
  SymElement& operator-=(const SymElement& other) {
    check_same_space(other);
    for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
    return *this;
  }
  SymElement operator+(const SymElement& other) const {
    SymElement out = *this;
    return out += other;
  }
  SymElement operator-(const SymElement& other) const {
    SymElement out = *this;
    return out -= other;
  }
  SymElement operator*(const Rational& c) const {
    SymElement out(mode_, alphabet_);
    if (c == 0) return out;
    for (const auto& [alpha, coeff] : terms_) out.terms_.emplace(alpha, coeff * c);
    return out;
  }
  friend SymElement operator*(const Rational& c, const SymElement& e) { return e * c; }

  bool operator==(const SymElement& other) const {
    return mode_ == other.mode_ && alphabet_ == other.alphabet_ &&
           terms_ == other.terms_;
  }

  /// Multidegree-homogeneous component.
  SymElement component(const DegreeVector& delta) const {
    SymElement out(mode_, alphabet_);
    for (const auto& [alpha, c] : terms_)
      if (alpha.multidegree() == delta) out.terms_.emplace(alpha, c);
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [alpha, c] : terms_) {
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (alpha.is_identity())
        out += symten::to_string(mag);
      else {
        if (mag != 1) out += symten::to_string(mag) + "*";
        out += alpha.to_string();
      }
    }
    return out;
  }

private:
  void check_same_space(const SymElement& other) const {
    if (!(mode_ == other.mode_))
      throw input_error("mode mismatch: " + mode_.to_string() + " vs " +
                        other.mode_.to_string());
    if (alphabet_ != other.alphabet_) throw input_error("alphabet mismatch");
  }

  Mode mode_;
  std::uint32_t alphabet_;
  TermMap terms_;
};

namespace detail {

// One inner matrix of the Product Formula constraint system: gamma[i][j] with
// row sums <= alpha_i and column sums <= beta_j. The callback receives the
// full matrix together with the forced margins.
template <class Fn>
void for_each_inner_matrix(const std::vector<std::uint32_t>& row_caps,
                           const std::vector<std::uint32_t>& col_caps, Fn&& emit) {
  const std::size_t h = row_caps.size(), k = col_caps.size();
  std::vector<std::vector<std::uint32_t>> gamma(h, std::vector<std::uint32_t>(k, 0));
  std::vector<std::uint32_t> col_used(k, 0);

  // cells in row-major order; recursion depth h*k
  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == h * k) {
      emit(gamma);
      return;
    }
    const std::size_t i = cell / k, j = cell % k;
    std::uint32_t row_used = 0;
    for (std::size_t jj = 0; jj < j; ++jj) row_used += gamma[i][jj];
    const std::uint32_t cap =
        std::min(row_caps[i] - row_used, col_caps[j] - col_used[j]);
    for (std::uint32_t v = 0; v <= cap; ++v) {
      gamma[i][j] = v;
      col_used[j] += v;
      self(self, cell + 1);
      col_used[j] -= v;
    }
    gamma[i][j] = 0;
  };
  rec(rec, 0);
}

} // namespace detail

/// Product Formula: the product of two orbit-sum basis elements, expanded
/// over all margin-constrained nonnegative integer matrices. A solution whose
/// word list repeats a word w in slots with exponents c1..ct collapses to a
/// single entry (w, sum c) weighted by the multinomial (sum c)!/(c1!...ct!).
/// Truncated mode drops solutions of total weight above the order; free mode
/// keeps everything.
inline SymElement basis_mul(const ExponentMap& alpha, const ExponentMap& beta,
                            const Mode& mode) {
  if (alpha.alphabet() != beta.alphabet()) throw input_error("alphabet mismatch");
  if (!mode.is_free()) {
    if (alpha.weight() > mode.order() || beta.weight() > mode.order())
      throw input_error("factor weight exceeds truncation order");
  }

  const auto& rs = alpha.entries();
  const auto& ss = beta.entries();
  const std::size_t h = rs.size(), k = ss.size();

  std::vector<std::uint32_t> row_caps(h), col_caps(k);
  for (std::size_t i = 0; i < h; ++i) row_caps[i] = rs[i].second;
  for (std::size_t j = 0; j < k; ++j) col_caps[j] = ss[j].second;

  // pairwise concatenations r_i * s_j, computed once
  std::vector<std::vector<Word>> products(h, std::vector<Word>());
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < k; ++j) products[i].push_back(rs[i].first * ss[j].first);

  SymElement result(mode, alpha.alphabet());
  detail::for_each_inner_matrix(
      row_caps, col_caps, [&](const std::vector<std::vector<std::uint32_t>>& gamma) {
        std::uint32_t inner = 0;
        for (std::size_t i = 0; i < h; ++i)
          for (std::size_t j = 0; j < k; ++j) inner += gamma[i][j];
        const std::uint32_t weight = alpha.weight() + beta.weight() - inner;
        if (!mode.admits_weight(weight)) return;

        // assemble the slot list: row margins, column margins, inner products
        std::vector<std::pair<Word, std::uint32_t>> slots;
        for (std::size_t i = 0; i < h; ++i) {
          std::uint32_t used = 0;
          for (std::size_t j = 0; j < k; ++j) used += gamma[i][j];
          if (rs[i].second > used) slots.emplace_back(rs[i].first, rs[i].second - used);
        }
        for (std::size_t j = 0; j < k; ++j) {
          std::uint32_t used = 0;
          for (std::size_t i = 0; i < h; ++i) used += gamma[i][j];
          if (ss[j].second > used) slots.emplace_back(ss[j].first, ss[j].second - used);
        }
        for (std::size_t i = 0; i < h; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if (gamma[i][j] > 0) slots.emplace_back(products[i][j], gamma[i][j]);

        // collapse repeated words, picking up the multinomial coefficient
        std::sort(slots.begin(), slots.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Integer coeff = 1;
        std::vector<ExponentMap::Entry> entries;
        std::size_t pos = 0;
        while (pos < slots.size()) {
          std::size_t end = pos;
          std::uint32_t total = 0;
          std::vector<std::uint32_t> parts;
          while (end < slots.size() && slots[end].first == slots[pos].first) {
            total += slots[end].second;
            parts.push_back(slots[end].second);
            ++end;
          }
          if (parts.size() > 1) coeff *= multinomial(parts.begin(), parts.end());
          entries.emplace_back(slots[pos].first, total);
          pos = end;
        }
        result.add_term(ExponentMap(alpha.alphabet(), std::move(entries)),
                        Rational(coeff));
      });
  return result;
}

/// Bilinear extension of basis_mul; associative and unital.
inline SymElement elem_mul(const SymElement& a, const SymElement& b) {
  if (!(a.mode() == b.mode()))
    throw input_error("mode mismatch: " + a.mode().to_string() + " vs " +
                      b.mode().to_string());
  if (a.alphabet() != b.alphabet()) throw input_error("alphabet mismatch");
  SymElement out(a.mode(), a.alphabet());
  for (const auto& [alpha, ca] : a.terms())
    for (const auto& [beta, cb] : b.terms())
      out += basis_mul(alpha, beta, a.mode()) * (ca * cb);
  return out;
}

/// The algebra map onto the order-n truncation: terms of weight above n are
/// dropped, everything else is kept unchanged.
inline SymElement truncate(const SymElement& a, std::uint32_t n) {
  SymElement out(Mode::truncated(n), a.alphabet());
  for (const auto& [alpha, c] : a.terms())
    if (alpha.weight() <= n) out.add_term(alpha, c);
  return out;
}

/// The basis of the multidegree-delta graded piece at order n: every exponent
/// map with weight <= n and multidegree delta, sorted.
inline std::vector<ExponentMap> enumerate_basis(std::uint32_t n,
                                                const DegreeVector& delta,
                                                const Limits& limits = {}) {
  if (n < 1) throw input_error("order must be >= 1");
  const auto m = static_cast<std::uint32_t>(delta.arity());
  if (m == 0) throw input_error("multidegree arity must be positive");

  const std::vector<Word> candidates = enumerate_words_within(delta);
  std::vector<ExponentMap> out;
  std::vector<ExponentMap::Entry> stack;

  auto rec = [&](auto&& self, std::size_t from, const DegreeVector& remaining,
                 std::uint32_t weight_left) -> void {
    if (remaining.is_zero()) {
      out.emplace_back(m, stack);
      if (out.size() > limits.max_basis)
        throw resource_error("graded basis exceeds cap of " +
                             std::to_string(limits.max_basis) + " elements");
      return;
    }
    for (std::size_t idx = from; idx < candidates.size(); ++idx) {
      const DegreeVector d = multidegree(candidates[idx]);
      if (!remaining.dominates(d)) continue;
      DegreeVector rest = remaining;
      for (std::uint32_t exp = 1; exp <= weight_left; ++exp) {
        rest = rest - d;
        stack.emplace_back(candidates[idx], exp);
        self(self, idx + 1, rest, weight_left - exp);
        stack.pop_back();
        if (!rest.dominates(d)) break;
      }
    }
  };
  rec(rec, 0, delta, n);

  std::sort(out.begin(), out.end());
  return out;
}

} // namespace symten
