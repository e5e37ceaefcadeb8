#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symten/errors.hpp"
#include "symten/exact_matrix.hpp"
#include "symten/exponent_map.hpp"
#include "symten/limits.hpp"
#include "symten/rational.hpp"
#include "symten/sym_element.hpp"
#include "symten/symmfunc.hpp"
#include "symten/word.hpp"

// The abelianized free object: a commutative polynomial ring freely generated
// by f[i; v] with i >= 1 and v an aperiodic necklace representative. Every
// basis index rewrites into these generators; truncated graded dimensions
// come from commutator-span ranks.

namespace symten {

/// Free commutative generator f[i; v]: v is primitive and equal to its own
/// canonical rotation; the multidegree is i * multidegree(v).
class FGen {
public:
  FGen(std::uint32_t index, Word necklace)
      : index_(index), necklace_(std::move(necklace)) {
    if (index_ < 1) throw input_error("generator index must be >= 1");
    if (necklace_.empty()) throw input_error("necklace word must be nonempty");
    if (!is_primitive(necklace_) || !(canonical_rotation(necklace_) == necklace_))
      throw input_error("word is not a canonical primitive necklace: " +
                        necklace_.to_string());
  }

  std::uint32_t index() const { return index_; }
  const Word& necklace() const { return necklace_; }

  DegreeVector multidegree() const {
    return symten::multidegree(necklace_).scaled(index_);
  }

  // variable order: necklace graded-lex first, then index
  std::strong_ordering operator<=>(const FGen& other) const {
    if (auto cmp = necklace_ <=> other.necklace_; cmp != 0) return cmp;
    return index_ <=> other.index_;
  }
  bool operator==(const FGen& other) const {
    return index_ == other.index_ && necklace_ == other.necklace_;
  }

  /// Text form: f[i;x1.x2]
  std::string to_string() const {
    return "f[" + std::to_string(index_) + ";" + necklace_.to_string() + "]";
  }

private:
  std::uint32_t index_;
  Word necklace_;
};

/// Power product of FGens: (generator, exponent) pairs sorted by generator,
/// exponents positive.
class FMonomial {
public:
  using Factor = std::pair<FGen, std::uint32_t>;

  FMonomial() = default;

  explicit FMonomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    for (auto& [gen, exp] : factors) {
      if (exp == 0) continue;
      if (!factors_.empty() && factors_.back().first == gen)
        factors_.back().second += exp;
      else
        factors_.emplace_back(std::move(gen), exp);
    }
  }

  static FMonomial one() { return FMonomial(); }
  static FMonomial generator(FGen g, std::uint32_t exp = 1) {
    FMonomial m;
    if (exp > 0) m.factors_.emplace_back(std::move(g), exp);
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  std::uint64_t total_exponent() const {
    std::uint64_t d = 0;
    for (const auto& [gen, exp] : factors_) d += exp;
    return d;
  }

  DegreeVector multidegree(std::uint32_t alphabet) const {
    DegreeVector d = DegreeVector::zeros(alphabet);
    for (const auto& [gen, exp] : factors_) d += gen.multidegree().scaled(exp);
    return d;
  }

  FMonomial operator*(const FMonomial& other) const {
    FMonomial out;
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

  // graded-lex over the FGen variable order
  std::strong_ordering operator<=>(const FMonomial& other) const {
    if (auto cmp = total_exponent() <=> other.total_exponent(); cmp != 0) return cmp;
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
      if (!(a->first == b->first))
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
  bool operator==(const FMonomial& other) const { return factors_ == other.factors_; }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [gen, exp] : factors_) {
      if (!out.empty()) out += "*";
      out += gen.to_string();
      if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
  }

private:
  std::vector<Factor> factors_;
};

/// Commutative polynomial in the FGen generators with exact coefficients.
/// The variable set is countable; monomials mention only what they use.
class AbelianPoly {
public:
  using TermMap = std::map<FMonomial, Rational>;

  explicit AbelianPoly(std::uint32_t alphabet) : alphabet_(alphabet) {
    if (alphabet_ == 0) throw input_error("alphabet size must be positive");
  }

  static AbelianPoly constant(std::uint32_t alphabet, const Rational& c) {
    AbelianPoly out(alphabet);
    if (c != 0) out.terms_[FMonomial::one()] = c;
    return out;
  }

  static AbelianPoly generator(std::uint32_t alphabet, FGen g) {
    AbelianPoly out(alphabet);
    out.terms_[FMonomial::generator(std::move(g))] = 1;
    return out;
  }

  std::uint32_t alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  AbelianPoly& operator+=(const AbelianPoly& other) {
    check_alphabet(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  AbelianPoly& operator-=(const AbelianPoly& other) {
    check_alphabet(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }
  AbelianPoly operator+(const AbelianPoly& other) const {
    AbelianPoly out = *this;
    return out += other;
  }
  AbelianPoly operator-(const AbelianPoly& other) const {
    AbelianPoly out = *this;
    return out -= other;
  }
  AbelianPoly operator*(const AbelianPoly& other) const {
    check_alphabet(other);
    AbelianPoly out(alphabet_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  AbelianPoly& operator*=(const AbelianPoly& other) { return *this = *this * other; }
  AbelianPoly operator*(const Rational& c) const {
    AbelianPoly out(alphabet_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
  }

  bool operator==(const AbelianPoly& other) const {
    return alphabet_ == other.alphabet_ && terms_ == other.terms_;
  }

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
        out += m.to_string();
      }
    }
    return out;
  }

private:
  void check_alphabet(const AbelianPoly& other) const {
    if (alphabet_ != other.alphabet_) throw input_error("alphabet mismatch");
  }

  std::uint32_t alphabet_;
  TermMap terms_;
};

namespace detail {

inline AbelianPoly ab_rewrite_impl(const ExponentMap& alpha,
                                   std::map<ExponentMap, AbelianPoly>& memo);

// Single-block case f_i(w): factor w = u^k with u primitive. For k = 1 the
// image is the generator indexed by the canonical rotation of u; for k >= 2
// the power reduces through P_{i,k} with E_j evaluated at f[j; u].
inline AbelianPoly ab_rewrite_single(const Word& w, std::uint32_t i) {
  const std::uint32_t m = w.alphabet();
  const auto [root, k] = primitive_root(w);
  const Word necklace = canonical_rotation(root);
  if (k == 1) return AbelianPoly::generator(m, FGen(i, necklace));

  const EPolynomial p = plethysm_P(i, k);
  AbelianPoly out(m);
  for (const auto& [mono, c] : p.terms()) {
    std::vector<FMonomial::Factor> factors;
    for (const auto& [var, exp] : mono.factors())
      factors.emplace_back(FGen(var + 1, necklace), exp); // var index v <-> E_{v+1}
    out.add_term(FMonomial(std::move(factors)), c);
  }
  return out;
}

inline AbelianPoly ab_rewrite_impl(const ExponentMap& alpha,
                                   std::map<ExponentMap, AbelianPoly>& memo) {
  if (alpha.is_identity()) return AbelianPoly::constant(alpha.alphabet(), 1);
  if (auto it = memo.find(alpha); it != memo.end()) return it->second;

  AbelianPoly result(alpha.alphabet());
  if (alpha.support_size() == 1) {
    const auto& [word, exp] = alpha.entries().front();
    result = ab_rewrite_single(word, exp);
  } else {
    // peel the graded-lex-first block: in the free object
    //   f_head * f_rest = f_alpha + (lower-weight terms)
    // so alpha rewrites as the product minus the rewritten remainder.
    const auto& head_entry = alpha.entries().front();
    const ExponentMap head = ExponentMap::single(head_entry.first, head_entry.second);
    std::vector<ExponentMap::Entry> rest_entries(alpha.entries().begin() + 1,
                                                 alpha.entries().end());
    const ExponentMap rest(alpha.alphabet(), std::move(rest_entries));

    const SymElement product = basis_mul(head, rest, Mode::free());
    result = ab_rewrite_impl(head, memo) * ab_rewrite_impl(rest, memo);
    for (const auto& [gamma, c] : product.terms()) {
      if (gamma == alpha) continue; // appears with coefficient exactly 1
      result -= ab_rewrite_impl(gamma, memo) * c;
    }
  }
  memo.emplace(alpha, result);
  return result;
}

} // namespace detail

/// Canonical image of a basis index in the abelianized free object, written
/// in the free generators f[i; v]. Works in free mode: no weight cap.
inline AbelianPoly ab_rewrite(const ExponentMap& alpha) {
  std::map<ExponentMap, AbelianPoly> memo;
  return detail::ab_rewrite_impl(alpha, memo);
}

/// Cheap feasibility probe for commutator_quotient_dim: the number of
/// candidate rows (c, a, b) the span would use, with the same resource
/// behavior but none of the products computed.
inline std::size_t commutator_candidate_count(std::uint32_t n,
                                              const DegreeVector& delta,
                                              const Limits& limits = {}) {
  const auto m = static_cast<std::uint32_t>(delta.arity());
  std::map<DegreeVector, std::size_t> sizes;
  {
    DegreeVector current = DegreeVector::zeros(m);
    auto rec = [&](auto&& self, std::size_t h) -> void {
      if (h == m) {
        sizes.emplace(current, enumerate_basis(n, current, limits).size());
        return;
      }
      for (std::uint32_t v = 0; v <= delta[h]; ++v) {
        current[h] = v;
        self(self, h + 1);
      }
      current[h] = 0;
    };
    rec(rec, 0);
  }
  // ordered pairs grouped by sub-degree, then halved after removing the
  // diagonal (a == b never contributes a row)
  std::size_t ordered = 0, diagonal = 0;
  for (const auto& [da, ca] : sizes) {
    if (da.is_zero() || ca == 0) continue;
    for (const auto& [db, cb] : sizes) {
      if (db.is_zero() || cb == 0) continue;
      const DegreeVector dab = da + db;
      if (!delta.dominates(dab)) continue;
      ordered += ca * cb * sizes.at(delta - dab);
      if (da == db) diagonal += ca * sizes.at(delta - dab);
      if (limits.max_matrix_rows && ordered > 2 * limits.max_matrix_rows + diagonal)
        throw resource_error("commutator span exceeds the cap of " +
                             std::to_string(limits.max_matrix_rows) + " rows");
    }
  }
  return (ordered - diagonal) / 2;
}

/// Graded dimension of the abelianized truncated algebra in multidegree
/// delta: the basis count minus the rank of the commutator span
/// { e_c * (e_a e_b - e_b e_a) }. Left multiples span the full graded piece
/// of the two-sided commutator ideal (see the test suite for the identity).
inline std::size_t commutator_quotient_dim(std::uint32_t n, const DegreeVector& delta,
                                           const Limits& limits = {}) {
  const std::vector<ExponentMap> basis = enumerate_basis(n, delta, limits);
  if (basis.empty()) return 0;

  const Mode mode = Mode::truncated(n);
  const auto m = static_cast<std::uint32_t>(delta.arity());

  // graded bases of every sub-multidegree, enumerated once
  std::map<DegreeVector, std::vector<ExponentMap>> bases;
  {
    DegreeVector current = DegreeVector::zeros(m);
    auto rec = [&](auto&& self, std::size_t h) -> void {
      if (h == m) {
        bases.emplace(current, enumerate_basis(n, current, limits));
        return;
      }
      for (std::uint32_t v = 0; v <= delta[h]; ++v) {
        current[h] = v;
        self(self, h + 1);
      }
      current[h] = 0;
    };
    rec(rec, 0);
  }

  std::vector<ExponentMap> smaller;
  for (const auto& [sub, elems] : bases) {
    if (sub.is_zero()) continue;
    smaller.insert(smaller.end(), elems.begin(), elems.end());
  }

  // candidate row count, before any product is computed
  std::size_t candidates = 0;
  for (std::size_t ia = 0; ia < smaller.size(); ++ia)
    for (std::size_t ib = ia + 1; ib < smaller.size(); ++ib) {
      const DegreeVector dab = smaller[ia].multidegree() + smaller[ib].multidegree();
      if (!delta.dominates(dab)) continue;
      candidates += bases.at(delta - dab).size();
      if (limits.max_matrix_rows && candidates > limits.max_matrix_rows)
        throw resource_error("commutator span of " + std::to_string(candidates) +
                             "+ rows exceeds the cap of " +
                             std::to_string(limits.max_matrix_rows));
    }

  std::vector<std::map<ExponentMap, Rational>> rows;
  for (std::size_t ia = 0; ia < smaller.size(); ++ia) {
    for (std::size_t ib = ia + 1; ib < smaller.size(); ++ib) {
      const DegreeVector dab = smaller[ia].multidegree() + smaller[ib].multidegree();
      if (!delta.dominates(dab)) continue;
      const SymElement commutator = elem_mul(SymElement::basis(mode, smaller[ia]),
                                             SymElement::basis(mode, smaller[ib])) -
                                    elem_mul(SymElement::basis(mode, smaller[ib]),
                                             SymElement::basis(mode, smaller[ia]));
      if (commutator.is_zero()) continue;
      for (const auto& gamma : bases.at(delta - dab)) {
        const SymElement row =
            elem_mul(SymElement::basis(mode, gamma), commutator);
        if (row.is_zero()) continue;
        rows.emplace_back(row.terms().begin(), row.terms().end());
        if (limits.max_matrix_rows && rows.size() > limits.max_matrix_rows)
          throw resource_error("commutator span exceeds the row cap");
      }
    }
  }
  return basis.size() - rank_of_span(rows, limits.max_matrix_rows);
}

/// Candidate generators f[i; v] with multidegree dominated by delta and index
/// capped at max_index (0 = unbounded), sorted by generator order.
inline std::vector<FGen> enumerate_fgens_within(const DegreeVector& delta,
                                                std::uint32_t max_index = 0) {
  const auto m = static_cast<std::uint32_t>(delta.arity());
  std::vector<FGen> out;
  for (const Word& v : enumerate_necklaces(m, static_cast<std::uint32_t>(delta.total()))) {
    const DegreeVector dv = multidegree(v);
    for (std::uint32_t i = 1;; ++i) {
      if (max_index && i > max_index) break;
      if (!delta.dominates(dv.scaled(i))) break;
      out.emplace_back(i, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of FGen multisets with total multidegree exactly delta; the graded
/// dimension of a free polynomial ring on those generators. A finite cap
/// restricts the generator indices (0 = no cap).
inline std::uint64_t free_monomial_count(const DegreeVector& delta,
                                         std::uint32_t index_cap = 0) {
  if (delta.is_zero()) return 1;
  const std::vector<FGen> gens = enumerate_fgens_within(delta, index_cap);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t from, const DegreeVector& remaining) -> void {
    if (remaining.is_zero()) {
      ++count;
      return;
    }
    for (std::size_t idx = from; idx < gens.size(); ++idx) {
      const DegreeVector d = gens[idx].multidegree();
      if (!remaining.dominates(d)) continue;
      DegreeVector rest = remaining;
      while (true) {
        rest = rest - d;
        self(self, idx + 1, rest);
        if (!rest.dominates(d)) break;
      }
    }
  };
  rec(rec, 0, delta);
  return count;
}

/// The FGen multisets themselves (support of the count above), each as a
/// monomial; used to span graded pieces of the invariant ring.
inline std::vector<FMonomial> enumerate_fgen_monomials(const DegreeVector& delta,
                                                       std::uint32_t index_cap = 0,
                                                       std::size_t size_cap = 0) {
  std::vector<FMonomial> out;
  if (delta.is_zero()) {
    out.push_back(FMonomial::one());
    return out;
  }
  const std::vector<FGen> gens = enumerate_fgens_within(delta, index_cap);
  std::vector<FMonomial::Factor> stack;
  auto rec = [&](auto&& self, std::size_t from, const DegreeVector& remaining) -> void {
    if (remaining.is_zero()) {
      out.emplace_back(stack);
      if (size_cap && out.size() > size_cap)
        throw resource_error("spanning multiset family exceeds the cap of " +
                             std::to_string(size_cap));
      return;
    }
    for (std::size_t idx = from; idx < gens.size(); ++idx) {
      const DegreeVector d = gens[idx].multidegree();
      if (!remaining.dominates(d)) continue;
      DegreeVector rest = remaining;
      for (std::uint32_t exp = 1;; ++exp) {
        rest = rest - d;
        stack.emplace_back(gens[idx], exp);
        self(self, idx + 1, rest);
        stack.pop_back();
        if (!rest.dominates(d)) break;
      }
    }
  };
  rec(rec, 0, delta);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace symten
