#include "sympdec/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace sympdec {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Smallest |entry| in the trailing submatrix starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t r = t; r < d.rows(); ++r) {
    for (std::size_t c = t; c < d.cols(); ++c) {
      if (d(r, c).is_zero()) continue;
      Integer a = abs_value(d(r, c));
      if (!best || a < best_abs) {
        best = {r, c};
        best_abs = std::move(a);
      }
    }
  }
  return best;
}

}  // namespace

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && !D(r, r).is_zero()) ++r;
  return r;
}

std::vector<Integer> SmithForm::diagonal() const {
  const std::size_t n = std::min(D.rows(), D.cols());
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(D(k, k));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = s.D;
  const std::size_t limit = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < limit; ++t) {
    while (true) {
      const auto pivot = min_pivot(d, t);
      if (!pivot) return s;
      const auto [pr, pc] = *pivot;
      d.swap_rows(t, pr);
      s.U.swap_rows(t, pr);
      d.swap_cols(t, pc);
      s.V.swap_cols(t, pc);

      bool cleared = true;
      for (std::size_t r = t + 1; r < d.rows(); ++r) {
        if (d(r, t).is_zero()) continue;
        const Integer q = d(r, t) / d(t, t);
        d.add_row_multiple(r, t, -q);
        s.U.add_row_multiple(r, t, -q);
        if (!d(r, t).is_zero()) cleared = false;
      }
      for (std::size_t c = t + 1; c < d.cols(); ++c) {
        if (d(t, c).is_zero()) continue;
        const Integer q = d(t, c) / d(t, t);
        d.add_col_multiple(c, t, -q);
        s.V.add_col_multiple(c, t, -q);
        if (!d(t, c).is_zero()) cleared = false;
      }
      if (!cleared) continue;  // a smaller remainder exists; re-pivot

      // Enforce the divisibility chain: fold an offending row into row t.
      bool divides_rest = true;
      for (std::size_t r = t + 1; r < d.rows() && divides_rest; ++r) {
        for (std::size_t c = t + 1; c < d.cols(); ++c) {
          if (!Integer(d(r, c) % d(t, t)).is_zero()) {
            d.add_row_multiple(t, r, 1);
            s.U.add_row_multiple(t, r, 1);
            divides_rest = false;
            break;
          }
        }
      }
      if (divides_rest) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  const std::size_t rank = s.rank();
  IntMatrix basis(m.cols(), m.cols() - rank);
  for (std::size_t r = 0; r < m.cols(); ++r) {
    for (std::size_t c = rank; c < m.cols(); ++c) basis(r, c - rank) = s.V(r, c);
  }
  return basis;
}

}  // namespace sympdec
