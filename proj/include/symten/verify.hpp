#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "symten/abelian.hpp"
#include "symten/genmat.hpp"
#include "symten/limits.hpp"
#include "symten/word.hpp"

namespace symten {

/// One graded piece of the isomorphism check: the three independently
/// computed dimensions and whether they coincide.
struct VerifyRow {
  DegreeVector delta;
  std::size_t dim_ts_ab = 0;   // commutator-quotient dimension
  std::size_t dim_c = 0;       // characteristic-coefficient subring
  std::size_t dim_invariants = 0;
  bool agree = false;
  std::int64_t wall_ms = 0;
};

struct VerifyReport {
  std::uint32_t n = 0, m = 0, max_total_degree = 0;
  std::vector<VerifyRow> rows;
  bool verdict = false; // true iff every row agrees
};

/// All multidegrees with total degree <= max_total, graded-lex ascending.
inline std::vector<DegreeVector> enumerate_multidegrees(std::uint32_t m,
                                                        std::uint32_t max_total) {
  std::vector<DegreeVector> out;
  DegreeVector current = DegreeVector::zeros(m);
  auto rec = [&](auto&& self, std::size_t h, std::uint32_t left) -> void {
    if (h == m) {
      out.push_back(current);
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      current[h] = v;
      self(self, h + 1, left - v);
    }
    current[h] = 0;
  };
  rec(rec, 0, max_total);
  std::sort(out.begin(), out.end());
  return out;
}

/// Graded-piece-by-graded-piece comparison of the abelianized truncated
/// algebra, the characteristic-coefficient subring, and the full ring of
/// conjugation invariants.
inline VerifyReport run_verify_iso(std::uint32_t n, std::uint32_t m,
                                   std::uint32_t max_total_degree,
                                   const Limits& limits = {}) {
  if (n < 1 || m < 1) throw input_error("n and m must be >= 1");
  VerifyReport report;
  report.n = n;
  report.m = m;
  report.max_total_degree = max_total_degree;
  report.verdict = true;

  const GenericContext ctx(n, m);
  const std::vector<DegreeVector> deltas = enumerate_multidegrees(m, max_total_degree);

  // feasibility pass: trip the resource caps before any expensive algebra
  for (const DegreeVector& delta : deltas) {
    (void)ambient_monomials(ctx, delta, limits);
    (void)commutator_candidate_count(n, delta, limits);
  }

  for (const DegreeVector& delta : deltas) {
    const auto start = std::chrono::steady_clock::now();
    VerifyRow row;
    row.delta = delta;
    row.dim_ts_ab = commutator_quotient_dim(n, delta, limits);
    row.dim_c = cn_graded_dim(ctx, delta, 0, limits);
    row.dim_invariants = gl_invariant_dim(ctx, delta, limits);
    row.agree = row.dim_ts_ab == row.dim_c && row.dim_c == row.dim_invariants;
    row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    report.verdict = report.verdict && row.agree;
    report.rows.push_back(std::move(row));
  }
  return report;
}

} // namespace symten
