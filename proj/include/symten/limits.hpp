#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace symten {

/// Resource caps for the potentially explosive enumerations. Exceeding a cap
/// raises resource_error rather than running unbounded.
struct Limits {
  std::size_t max_basis = 5000;         // basis elements per graded piece
  std::size_t max_matrix_rows = 20000;  // rows fed to rank computations
  std::size_t max_tensor_terms = 1000000;
  std::size_t max_tensor_order = 6;

  /// Defaults overridden by SYMTEN_MAX_BASIS / SYMTEN_MAX_ROWS when set.
  static Limits from_environment() {
    Limits limits;
    if (const char* v = std::getenv("SYMTEN_MAX_BASIS")) limits.max_basis = std::stoul(v);
    if (const char* v = std::getenv("SYMTEN_MAX_ROWS"))
      limits.max_matrix_rows = std::stoul(v);
    return limits;
  }
};

} // namespace symten
