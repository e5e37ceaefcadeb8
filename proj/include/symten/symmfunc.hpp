#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "symten/errors.hpp"
#include "symten/monomial.hpp"
#include "symten/multipoly.hpp"
#include "symten/rational.hpp"

// Classical symmetric functions in finitely many variables, the fundamental
// theorem rewriting into the elementary basis, and the power-plethysm
// polynomials P_{h,k} that drive power reduction elsewhere.

namespace symten {

/// Weakly decreasing sequence of positive parts.
class Partition {
public:
  explicit Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw input_error("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw input_error("partition parts must be weakly decreasing");
    }
  }

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::uint64_t weight() const {
    std::uint64_t w = 0;
    for (auto p : parts_) w += p;
    return w;
  }

private:
  std::vector<std::uint32_t> parts_;
};

// Formal symbols E1, E2, ... share one variable set so that expressions
// computed in different numbers of y-variables compare directly.
inline constexpr std::size_t kMaxElementaryIndex = 64;

inline const VarSetPtr& e_varset() {
  static const VarSetPtr vars = make_indexed_varset("E", kMaxElementaryIndex);
  return vars;
}

/// Polynomial in the formal elementary symmetric symbols E1, E2, ...
using EPolynomial = MultiPoly;

inline VarSetPtr y_varset(std::size_t n) { return make_indexed_varset("y", n); }

/// Elementary symmetric polynomial e_k in the given variables: the sum over
/// k-subsets of variable products. Zero when k exceeds the variable count;
/// e_0 = 1.
inline MultiPoly elementary(std::uint32_t k, const VarSetPtr& vars) {
  MultiPoly out(vars);
  const std::size_t n = vars->size();
  if (k == 0) return MultiPoly::constant(vars, 1);
  if (k > n) return out;
  std::vector<std::uint32_t> subset(k);
  for (std::uint32_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    std::vector<Monomial::Factor> factors;
    factors.reserve(k);
    for (auto v : subset) factors.emplace_back(v, 1);
    out.add_term(Monomial(std::move(factors)), 1);
    // next k-combination of {0..n-1}
    std::size_t i = k;
    while (i-- > 0) {
      if (subset[i] + (k - i) < n) {
        ++subset[i];
        for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

inline MultiPoly elementary(std::uint32_t k, std::size_t n_vars) {
  return elementary(k, y_varset(n_vars));
}

/// r-th power sum: sum of y_i^r.
inline MultiPoly power_sum(std::uint32_t r, const VarSetPtr& vars) {
  if (r < 1) throw input_error("power sum index must be >= 1");
  MultiPoly out(vars);
  for (std::uint32_t i = 0; i < vars->size(); ++i)
    out.add_term(Monomial::variable(i, r), 1);
  return out;
}

inline MultiPoly power_sum(std::uint32_t r, std::size_t n_vars) {
  return power_sum(r, y_varset(n_vars));
}

/// Orbit sum of the monomial y^lambda under all variable permutations, each
/// distinct monomial once.
inline MultiPoly monomial_symmetric(const Partition& lambda, const VarSetPtr& vars) {
  if (lambda.length() > vars->size())
    throw input_error("partition has more parts than variables");
  std::vector<std::uint32_t> exps(vars->size(), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  MultiPoly out(vars);
  do {
    std::vector<Monomial::Factor> factors;
    for (std::uint32_t v = 0; v < exps.size(); ++v)
      if (exps[v] > 0) factors.emplace_back(v, exps[v]);
    out.add_term(Monomial(std::move(factors)), 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

inline bool is_symmetric_poly(const MultiPoly& f) {
  for (std::uint32_t i = 0; i + 1 < f.vars()->size(); ++i)
    if (!(f.swap_variables(i, i + 1) == f)) return false;
  return true;
}

/// Fundamental-theorem rewriting: expresses a symmetric polynomial as a
/// polynomial in the formal symbols E1..EN, exactly. Classical elimination:
/// the graded-lex leading term c*y^lambda is killed by subtracting
/// c * prod e_i^(lambda_i - lambda_{i+1}).
inline EPolynomial ftsp_rewrite(const MultiPoly& f) {
  const std::size_t n = f.vars()->size();
  if (n > kMaxElementaryIndex)
    throw input_error("too many variables for the elementary symbol table");
  if (!is_symmetric_poly(f)) throw input_error("polynomial is not symmetric");

  std::vector<MultiPoly> elem;
  elem.reserve(n + 1);
  for (std::uint32_t i = 0; i <= n; ++i) elem.push_back(elementary(i, f.vars()));

  EPolynomial out(e_varset());
  MultiPoly rest = f;
  while (!rest.is_zero()) {
    const auto& [lead, c] = rest.leading_term();
    std::vector<std::uint32_t> lambda(n, 0);
    for (const auto& [var, exp] : lead.factors()) lambda[var] = exp;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (lambda[i] < lambda[i + 1])
        throw input_error("leading exponents not weakly decreasing"); // not symmetric

    MultiPoly product = MultiPoly::constant(f.vars(), c);
    std::vector<Monomial::Factor> e_factors;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t step = lambda[i] - (i + 1 < n ? lambda[i + 1] : 0);
      if (step == 0) continue;
      product *= elem[i + 1].pow(step);
      e_factors.emplace_back(static_cast<std::uint32_t>(i), step);
    }
    out.add_term(Monomial(std::move(e_factors)), c);
    rest -= product;
  }
  return out;
}

/// Substitute concrete values for the symbols E1..EN (E_i -> values[i-1]);
/// symbols beyond the list evaluate to zero.
inline MultiPoly evaluate_e_symbols(const EPolynomial& p,
                                    const std::vector<MultiPoly>& values,
                                    const VarSetPtr& target) {
  return p.substitute(target, [&](std::uint32_t var) {
    if (var < values.size()) return values[var];
    return MultiPoly::zero(target);
  });
}

/// p_k in the elementary basis via Newton's recurrence
///   p_{j+1} = (-1)^j [ (j+1) E_{j+1} - sum_{i=1..j} (-1)^{i-1} p_i E_{j+1-i} ]
/// with E_t = 0 for t > N.
inline EPolynomial newton_p_in_e(std::uint32_t k, std::uint32_t n_vars) {
  if (k < 1) throw input_error("power sum index must be >= 1");
  if (n_vars > kMaxElementaryIndex)
    throw input_error("too many variables for the elementary symbol table");
  const auto& evars = e_varset();
  auto e_symbol = [&](std::uint32_t t) {
    if (t == 0) return MultiPoly::constant(evars, 1);
    if (t > n_vars) return MultiPoly::zero(evars);
    return MultiPoly::variable(evars, t - 1);
  };

  std::vector<EPolynomial> p;
  p.push_back(e_symbol(1)); // p_1 = E1
  for (std::uint32_t j = 1; j < k; ++j) {
    EPolynomial next = e_symbol(j + 1) * Rational(j + 1);
    for (std::uint32_t i = 1; i <= j; ++i) {
      const EPolynomial term = p[i - 1] * e_symbol(j + 1 - i);
      if (i % 2 == 1)
        next -= term;
      else
        next += term;
    }
    if (j % 2 == 1) next = next * Rational(-1);
    p.push_back(std::move(next));
  }
  return p[k - 1];
}

/// P_{h,k}: the elementary-basis expression of e_h evaluated at k-th powers
/// of the variables. Computed by the fundamental-theorem rewriting in exactly
/// h*k variables, the minimum that makes the answer stable for all larger
/// variable counts.
inline EPolynomial plethysm_P(std::uint32_t h, std::uint32_t k) {
  if (h < 1 || k < 1) throw input_error("plethysm indices must be >= 1");
  const std::uint64_t n_vars = static_cast<std::uint64_t>(h) * k;
  if (n_vars > kMaxElementaryIndex)
    throw input_error("plethysm degree exceeds the elementary symbol table");
  const auto vars = y_varset(n_vars);
  // e_h(y_1^k, ..., y_N^k): scale every exponent by k
  MultiPoly eh = elementary(h, vars);
  MultiPoly scaled(vars);
  for (const auto& [mono, c] : eh.terms()) scaled.add_term(mono.pow(k), c);
  return ftsp_rewrite(scaled);
}

} // namespace symten
