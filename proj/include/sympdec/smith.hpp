#pragma once

#include <vector>

#include "sympdec/int_matrix.hpp"

namespace sympdec {

/// U * M * V == D with D diagonal, d1 | d2 | ..., all d_k >= 0, U and V
/// unimodular.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  std::size_t rank() const;
  /// Diagonal entries d_1..d_min(rows, cols), zeros included.
  std::vector<Integer> diagonal() const;
};

/// Pivots on the entry of minimal absolute value (first in row-major order),
/// so the result is deterministic.
SmithForm smith_normal_form(const IntMatrix& m);

/// Columns span the integer kernel {x : M x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

}  // namespace sympdec
