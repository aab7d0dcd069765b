#pragma once

// Integer lattice kernels: Smith normal form with unimodular transforms and a
// Bareiss determinant.  All arithmetic is int64 with overflow detection.

#include <cstdint>
#include <vector>

namespace hypaut {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SmithForm {
  /// U * A * V = diag(s_0, ..., s_{rank-1}, 0, ...), s_i > 0 and s_i | s_{i+1}.
  IntMatrix U;  // rows x rows
  IntMatrix V;  // cols x cols
  std::vector<std::int64_t> diagonal;  // length rank
  int rank = 0;
  int rows = 0;
  int cols = 0;
};

/// Throws hypaut::Error on int64 overflow.
SmithForm smith_normal_form(const IntMatrix& a, int cols);

/// Exact determinant of a square matrix by fraction-free elimination.
std::int64_t bareiss_determinant(IntMatrix a);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace hypaut
