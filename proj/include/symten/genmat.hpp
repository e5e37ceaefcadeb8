#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symten/abelian.hpp"
#include "symten/errors.hpp"
#include "symten/exact_matrix.hpp"
#include "symten/limits.hpp"
#include "symten/monomial.hpp"
#include "symten/multipoly.hpp"
#include "symten/rational.hpp"
#include "symten/word.hpp"

// Generic matrices: words in matrices whose entries are independent
// variables, their division-free characteristic polynomials, the determinant
// homomorphism on the abelianized side, and exact graded dimensions of the
// invariant ring by Lie-algebra derivations.

namespace symten {

/// Square matrix of polynomials over one shared variable set.
class PolyMatrix {
public:
  PolyMatrix(std::size_t size, const VarSetPtr& vars)
      : size_(size), entries_(size * size, MultiPoly::zero(vars)) {
    if (size_ == 0) throw input_error("matrix size must be positive");
  }

  std::size_t size() const { return size_; }
  MultiPoly& at(std::size_t r, std::size_t c) { return entries_[r * size_ + c]; }
  const MultiPoly& at(std::size_t r, std::size_t c) const {
    return entries_[r * size_ + c];
  }
  const VarSetPtr& vars() const { return entries_.front().vars(); }

  PolyMatrix operator*(const PolyMatrix& other) const {
    if (size_ != other.size_) throw input_error("matrix size mismatch");
    PolyMatrix out(size_, vars());
    for (std::size_t r = 0; r < size_; ++r)
      for (std::size_t c = 0; c < size_; ++c) {
        MultiPoly sum = MultiPoly::zero(vars());
        for (std::size_t t = 0; t < size_; ++t) sum += at(r, t) * other.at(t, c);
        out.at(r, c) = std::move(sum);
      }
    return out;
  }

  MultiPoly trace() const {
    MultiPoly out = MultiPoly::zero(vars());
    for (std::size_t r = 0; r < size_; ++r) out += at(r, r);
    return out;
  }

private:
  std::size_t size_;
  std::vector<MultiPoly> entries_;
};

/// The ambient polynomial ring of m generic n x n matrices: one variable
/// xi[i,j,h] per entry, with multidegree the unit vector at h.
class GenericContext {
public:
  GenericContext(std::uint32_t n, std::uint32_t m) : n_(n), m_(m) {
    if (n_ < 1 || m_ < 1) throw input_error("matrix size and count must be >= 1");
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n) * n * m);
    for (std::uint32_t h = 1; h <= m; ++h)
      for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j)
          names.push_back("xi[" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(h) + "]");
    vars_ = make_varset("xi(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")",
                        std::move(names));
  }

  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  const VarSetPtr& vars() const { return vars_; }

  std::uint32_t var_index(std::uint32_t i, std::uint32_t j, std::uint32_t h) const {
    return ((h - 1) * n_ + (i - 1)) * n_ + (j - 1);
  }
  // inverse of var_index, 1-based components
  std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>
  var_position(std::uint32_t index) const {
    const std::uint32_t j = index % n_ + 1;
    const std::uint32_t i = (index / n_) % n_ + 1;
    const std::uint32_t h = index / (n_ * n_) + 1;
    return {i, j, h};
  }

  /// The h-th generic matrix (1-based).
  PolyMatrix generic_matrix(std::uint32_t h) const {
    if (h < 1 || h > m_) throw input_error("generic matrix index out of range");
    PolyMatrix out(n_, vars_);
    for (std::uint32_t i = 1; i <= n_; ++i)
      for (std::uint32_t j = 1; j <= n_; ++j)
        out.at(i - 1, j - 1) = MultiPoly::variable(vars_, var_index(i, j, h));
    return out;
  }

  /// Multidegree of a monomial in the xi variables: component h-1 totals the
  /// exponents inside block h.
  DegreeVector poly_multidegree(const Monomial& mono) const {
    DegreeVector d = DegreeVector::zeros(m_);
    for (const auto& [var, exp] : mono.factors()) d[var / (n_ * n_)] += exp;
    return d;
  }

private:
  std::uint32_t n_, m_;
  VarSetPtr vars_;
};

/// Image of a word under the universal n-dimensional representation: the
/// product of the corresponding generic matrices.
inline PolyMatrix word_matrix(const GenericContext& ctx, const Word& w) {
  if (w.empty()) throw input_error("word must be nonempty");
  if (w.alphabet() > ctx.m()) throw input_error("word uses more generators than matrices");
  PolyMatrix out = ctx.generic_matrix(w.letters().front());
  for (std::size_t pos = 1; pos < w.length(); ++pos)
    out = out * ctx.generic_matrix(w.letters()[pos]);
  return out;
}

namespace detail {

// Berkowitz recursion for det(tI - M), truncated: returns the leading
// coefficients coeff[0..imax] where coeff[j] multiplies t^{n-j}. The
// recursion C_r = Q_r C_{r-1} is triangular in the coefficient index, so
// truncation at imax is exact and skips the expensive high-index minors.
inline std::vector<MultiPoly> berkowitz_leading(const PolyMatrix& matrix,
                                                std::size_t imax) {
  const std::size_t n = matrix.size();
  const VarSetPtr& vars = matrix.vars();

  std::vector<MultiPoly> coeff = {MultiPoly::constant(vars, 1)};
  if (imax >= 1) coeff.push_back(-matrix.at(0, 0));
  for (std::size_t r = 2; r <= n; ++r) {
    // Toeplitz column for the leading r x r principal submatrix:
    // q[0] = 1, q[1] = -a_rr, q[j] = -(R A^{j-2} S) for the bordering row R,
    // column S and previous principal block A.
    const std::size_t depth = std::min(r, imax);
    std::vector<MultiPoly> q;
    q.push_back(MultiPoly::constant(vars, 1));
    if (depth >= 1) q.push_back(-matrix.at(r - 1, r - 1));
    std::vector<MultiPoly> s(r - 1, MultiPoly::zero(vars));
    for (std::size_t i = 0; i < r - 1; ++i) s[i] = matrix.at(i, r - 1);
    for (std::size_t j = 2; j <= depth; ++j) {
      MultiPoly dot = MultiPoly::zero(vars);
      for (std::size_t i = 0; i < r - 1; ++i) dot += matrix.at(r - 1, i) * s[i];
      q.push_back(-dot);
      if (j == depth) break;
      std::vector<MultiPoly> next(r - 1, MultiPoly::zero(vars));
      for (std::size_t i = 0; i < r - 1; ++i)
        for (std::size_t t = 0; t < r - 1; ++t) next[i] += matrix.at(i, t) * s[t];
      s = std::move(next);
    }
    const std::size_t keep = std::min(r, imax);
    std::vector<MultiPoly> updated(keep + 1, MultiPoly::zero(vars));
    for (std::size_t i = 0; i <= keep; ++i)
      for (std::size_t j = 0; j < coeff.size() && j <= i; ++j)
        if (i - j < q.size()) updated[i] += q[i - j] * coeff[j];
    coeff = std::move(updated);
  }
  return coeff;
}

} // namespace detail

/// Characteristic polynomial det(tI - M) by the Berkowitz method: division
/// free, so integer inputs stay integral over any commutative ring. Returns
/// the monic coefficient list c[0..n] with c[j] the coefficient of t^j.
inline std::vector<MultiPoly> charpoly_coeffs(const PolyMatrix& matrix) {
  const std::size_t n = matrix.size();
  const std::vector<MultiPoly> leading = detail::berkowitz_leading(matrix, n);
  std::vector<MultiPoly> by_power(n + 1, MultiPoly::zero(matrix.vars()));
  for (std::size_t j = 0; j <= n; ++j) by_power[n - j] = leading[j];
  return by_power;
}

/// Signed characteristic coefficients: det(t - M) = t^n + sum (-1)^i s_i
/// t^{n-i}, so s_1 is the trace and s_n the determinant. A positive count
/// limits the computation to s_1..s_count.
inline std::vector<MultiPoly> signed_char_coeffs(const PolyMatrix& matrix,
                                                 std::size_t count = 0) {
  const std::size_t n = matrix.size();
  if (count == 0 || count > n) count = n;
  const std::vector<MultiPoly> leading = detail::berkowitz_leading(matrix, count);
  std::vector<MultiPoly> sigma;
  sigma.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    MultiPoly v = leading[i];
    if (i % 2 == 1) v = -v;
    sigma.push_back(std::move(v));
  }
  return sigma;
}

/// A polynomial expected to lie in the invariant subring; homogeneous of
/// multidegree i * multidegree(w) when produced by sigma(ctx, i, w).
using InvariantPoly = MultiPoly;

/// s_i of the word's generic-matrix image. Rejects i outside 1..n (the
/// characteristic polynomial has degree n).
inline InvariantPoly sigma(const GenericContext& ctx, std::uint32_t i, const Word& w) {
  if (i < 1 || i > ctx.n())
    throw input_error("characteristic coefficient index out of range: " +
                      std::to_string(i));
  return signed_char_coeffs(word_matrix(ctx, w), i)[i - 1];
}

/// The determinant homomorphism applied to an abelianized element:
/// f[i; v] evaluates to sigma(ctx, i, v), and to zero once i exceeds n.
inline MultiPoly delta_apply(const GenericContext& ctx, const AbelianPoly& p) {
  std::map<std::pair<std::uint32_t, Word>, MultiPoly> cache;
  auto sigma_of = [&](const FGen& g) -> const MultiPoly& {
    const auto key = std::make_pair(g.index(), g.necklace());
    auto it = cache.find(key);
    if (it == cache.end()) {
      MultiPoly value = g.index() <= ctx.n() ? sigma(ctx, g.index(), g.necklace())
                                             : MultiPoly::zero(ctx.vars());
      it = cache.emplace(key, std::move(value)).first;
    }
    return it->second;
  };

  MultiPoly out = MultiPoly::zero(ctx.vars());
  for (const auto& [mono, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(ctx.vars(), c);
    for (const auto& [gen, exp] : mono.factors()) {
      if (term.is_zero()) break;
      term *= sigma_of(gen).pow(exp);
    }
    out += term;
  }
  return out;
}

namespace detail {

// Determinant by dynamic programming over column subsets, expanding along the
// last used row. The filter prunes monomials that cannot contribute to the
// requested coefficient; pruning interim minors is sound because products
// only ever raise auxiliary-variable exponents.
inline MultiPoly det_filtered(const PolyMatrix& matrix,
                              const std::function<bool(const Monomial&)>& keep) {
  const std::size_t n = matrix.size();
  if (n > 16) throw resource_error("determinant size above the subset-DP cap");
  const VarSetPtr& vars = matrix.vars();

  auto filtered = [&](const MultiPoly& p) {
    MultiPoly out(vars);
    for (const auto& [mono, c] : p.terms())
      if (keep(mono)) out.add_term(mono, c);
    return out;
  };

  std::vector<MultiPoly> minor(std::size_t(1) << n, MultiPoly::zero(vars));
  minor[0] = MultiPoly::constant(vars, 1);
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    const auto row = static_cast<std::size_t>(__builtin_popcount(subset)) - 1;
    MultiPoly value = MultiPoly::zero(vars);
    std::size_t position = 0;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (!(subset & (1u << c))) continue;
      const MultiPoly contribution = matrix.at(row, c) * minor[subset & ~(1u << c)];
      if ((row + position) % 2 == 0)
        value += contribution;
      else
        value -= contribution;
      ++position;
    }
    minor[subset] = filtered(value);
  }
  return minor[(1u << n) - 1];
}

} // namespace detail

/// Coefficient of t^alpha in det(I + sum_v t_v * word_matrix(v)): the
/// determinant polynomial law read off directly, with no rewriting involved.
/// This is the independent oracle against delta_apply(ab_rewrite(alpha)).
inline MultiPoly delta_coeff(const GenericContext& ctx, const ExponentMap& alpha) {
  if (alpha.weight() > ctx.n())
    throw input_error("exponent map weight exceeds the matrix size");

  const std::size_t k = alpha.support_size();
  const std::size_t xi_count = ctx.vars()->size();

  // adjoin one auxiliary commuting variable per support word
  std::vector<std::string> names = ctx.vars()->names();
  for (std::size_t t = 0; t < k; ++t) names.push_back("t" + std::to_string(t + 1));
  const VarSetPtr extended =
      make_varset(ctx.vars()->id() + "+t" + std::to_string(k), std::move(names));

  auto embed = [&](const MultiPoly& p) {
    return p.substitute(extended, [&](std::uint32_t var) {
      return MultiPoly::variable(extended, var);
    });
  };

  PolyMatrix m(ctx.n(), extended);
  for (std::uint32_t r = 0; r < ctx.n(); ++r)
    m.at(r, r) = MultiPoly::constant(extended, 1);
  for (std::size_t t = 0; t < k; ++t) {
    const auto& [word, exp] = alpha.entries()[t];
    const PolyMatrix wm = word_matrix(ctx, word);
    const MultiPoly tvar =
        MultiPoly::variable(extended, static_cast<std::uint32_t>(xi_count + t));
    for (std::uint32_t r = 0; r < ctx.n(); ++r)
      for (std::uint32_t c = 0; c < ctx.n(); ++c)
        m.at(r, c) += tvar * embed(wm.at(r, c));
  }

  auto t_exponent_ok = [&](const Monomial& mono) {
    for (const auto& [var, exp] : mono.factors())
      if (var >= xi_count && exp > alpha.entries()[var - xi_count].second) return false;
    return true;
  };
  const MultiPoly det = detail::det_filtered(m, t_exponent_ok);

  // read off the coefficient of prod t_v^alpha(v) and strip the t variables
  MultiPoly out = MultiPoly::zero(ctx.vars());
  for (const auto& [mono, c] : det.terms()) {
    std::vector<Monomial::Factor> xi_part;
    bool exact = true;
    std::vector<std::uint32_t> t_seen(k, 0);
    for (const auto& [var, exp] : mono.factors()) {
      if (var < xi_count)
        xi_part.emplace_back(var, exp);
      else
        t_seen[var - xi_count] = exp;
    }
    for (std::size_t t = 0; t < k && exact; ++t)
      exact = t_seen[t] == alpha.entries()[t].second;
    if (exact) out.add_term(Monomial(std::move(xi_part)), c);
  }
  return out;
}

/// All monomials of the ambient ring with the given multidegree (the basis of
/// its graded piece), graded-lex sorted.
inline std::vector<Monomial> ambient_monomials(const GenericContext& ctx,
                                               const DegreeVector& delta,
                                               const Limits& limits = {}) {
  if (delta.arity() != ctx.m()) throw input_error("multidegree arity mismatch");
  const std::uint32_t block = ctx.n() * ctx.n();
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> stack;

  // distribute degree delta[h] over the block-h variables, block by block
  auto rec = [&](auto&& self, std::uint32_t h, std::uint32_t var,
                 std::uint32_t remaining) -> void {
    if (remaining == 0 || var == (h + 1) * block - 1) {
      if (remaining > 0) stack.emplace_back(var, remaining);
      if (h + 1 == ctx.m()) {
        out.emplace_back(stack);
        if (out.size() > limits.max_basis)
          throw resource_error("graded monomial basis exceeds cap of " +
                               std::to_string(limits.max_basis));
      } else
        self(self, h + 1, (h + 1) * block, delta[h + 1]);
      if (remaining > 0) stack.pop_back();
      return;
    }
    for (std::uint32_t e = 0; e <= remaining; ++e) {
      if (e > 0) stack.emplace_back(var, e);
      self(self, h, var + 1, remaining - e);
      if (e > 0) stack.pop_back();
    }
  };
  rec(rec, 0, 0, delta[0]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Graded dimension of the characteristic-coefficient subring: the rank of
/// all products of sigma(i, v) over FGen multisets matching the multidegree,
/// with indices capped at n (higher coefficients vanish).
inline std::size_t cn_graded_dim(const GenericContext& ctx, const DegreeVector& delta,
                                 std::uint32_t max_index = 0,
                                 const Limits& limits = {}) {
  if (delta.arity() != ctx.m()) throw input_error("multidegree arity mismatch");
  if (delta.is_zero()) return 1;
  const std::uint32_t cap =
      max_index == 0 ? ctx.n() : std::min(max_index, ctx.n());

  const std::vector<FMonomial> monomials =
      enumerate_fgen_monomials(delta, cap, limits.max_matrix_rows);

  std::map<std::pair<std::uint32_t, Word>, MultiPoly> cache;
  auto sigma_of = [&](const FGen& g) -> const MultiPoly& {
    const auto key = std::make_pair(g.index(), g.necklace());
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, sigma(ctx, g.index(), g.necklace())).first;
    return it->second;
  };

  std::vector<std::map<Monomial, Rational>> rows;
  rows.reserve(monomials.size());
  for (const auto& fm : monomials) {
    MultiPoly product = MultiPoly::constant(ctx.vars(), 1);
    for (const auto& [gen, exp] : fm.factors()) product *= sigma_of(gen).pow(exp);
    rows.emplace_back(product.terms().begin(), product.terms().end());
  }
  return rank_of_span(rows, limits.max_matrix_rows);
}

namespace detail {

// torus weight of a monomial under conjugation: entry (i,j) carries u_i - u_j
inline std::vector<std::int64_t> conjugation_weight(const GenericContext& ctx,
                                                    const Monomial& mono) {
  std::vector<std::int64_t> weight(ctx.n(), 0);
  for (const auto& [var, exp] : mono.factors()) {
    const auto [i, j, h] = ctx.var_position(var);
    weight[i - 1] += exp;
    weight[j - 1] -= exp;
  }
  return weight;
}

} // namespace detail

/// Derivation image D_ab(p) with D_ab(xi[i,j,h]) = [E_ab, xi_h]_{ij}
/// = delta_{ia} xi[b,j,h] - delta_{jb} xi[i,a,h], extended by the product
/// rule. Annihilation by every D_ab characterizes invariants over the
/// rationals (the group is connected).
inline MultiPoly derivation_apply(const GenericContext& ctx, std::uint32_t a,
                                  std::uint32_t b, const MultiPoly& p) {
  if (a < 1 || a > ctx.n() || b < 1 || b > ctx.n())
    throw input_error("derivation indices out of range");
  MultiPoly out = MultiPoly::zero(ctx.vars());
  for (const auto& [mono, c] : p.terms()) {
    const auto& factors = mono.factors();
    for (std::size_t t = 0; t < factors.size(); ++t) {
      const auto [i, j, h] = ctx.var_position(factors[t].first);
      if (i != a && j != b) continue;
      // monomial with one copy of this factor removed
      std::vector<Monomial::Factor> rest;
      rest.reserve(factors.size());
      for (std::size_t s = 0; s < factors.size(); ++s) {
        auto [var, exp] = factors[s];
        if (s == t) --exp;
        if (exp > 0) rest.emplace_back(var, exp);
      }
      const Monomial base(std::move(rest));
      const Rational scale = c * factors[t].second;
      if (i == a)
        out.add_term(base * Monomial::variable(ctx.var_index(b, j, h)), scale);
      if (j == b)
        out.add_term(base * Monomial::variable(ctx.var_index(i, a, h)), -scale);
    }
  }
  return out;
}

/// Dimension of the multidegree-delta invariants of simultaneous conjugation,
/// as the nullspace dimension of all n^2 derivations on the graded piece.
/// Diagonal derivations scale monomials by their torus weight, so the
/// nullspace lives inside the weight-zero monomial span; the off-diagonal
/// derivations are then stacked and ranked.
inline std::size_t gl_invariant_dim(const GenericContext& ctx,
                                    const DegreeVector& delta,
                                    const Limits& limits = {}) {
  const std::vector<Monomial> all = ambient_monomials(ctx, delta, limits);
  std::vector<Monomial> weight_zero;
  for (const auto& mono : all) {
    const auto w = detail::conjugation_weight(ctx, mono);
    if (std::all_of(w.begin(), w.end(), [](auto v) { return v == 0; }))
      weight_zero.push_back(mono);
  }
  if (weight_zero.size() > limits.max_matrix_rows)
    throw resource_error("weight-zero basis exceeds the row cap");

  using RowKey = std::pair<std::uint32_t, Monomial>;
  std::vector<std::map<RowKey, Rational>> columns;
  columns.reserve(weight_zero.size());
  for (const auto& mono : weight_zero) {
    std::map<RowKey, Rational> column;
    const MultiPoly p = MultiPoly::from_monomial(ctx.vars(), mono);
    for (std::uint32_t a = 1; a <= ctx.n(); ++a)
      for (std::uint32_t b = 1; b <= ctx.n(); ++b) {
        if (a == b) continue; // acts by the (zero) weight here
        const MultiPoly image = derivation_apply(ctx, a, b, p);
        const std::uint32_t derivation_id = (a - 1) * ctx.n() + (b - 1);
        for (const auto& [target, coeff] : image.terms())
          column.emplace(RowKey(derivation_id, target), coeff);
      }
    columns.push_back(std::move(column));
  }
  return weight_zero.size() - rank_of_span(columns, limits.max_matrix_rows);
}

} // namespace symten
