#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sympdec/cyclotomic.hpp"

namespace sympdec {

/// Dense row-major matrix over Q(zeta_8). Value type; all arithmetic is exact.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<CycScalar>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ExactMatrix scalar(std::size_t n, const CycScalar& s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  CycScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const CycScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactMatrix transpose() const;
  ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b);

  bool is_identity() const;

  ExactMatrix& operator+=(const ExactMatrix& rhs);
  ExactMatrix& operator-=(const ExactMatrix& rhs);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const CycScalar& s, const ExactMatrix& m);
  ExactMatrix operator-() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycScalar> data_;
};

/// Gauss-Jordan inverse; throws SingularMatrix / ShapeMismatch.
ExactMatrix inverse(const ExactMatrix& m);
CycScalar determinant(const ExactMatrix& m);

/// Kronecker product with A's index varying slowest.
ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
/// diag(A, B).
ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix block_diag(std::span<const ExactMatrix> blocks);
/// [[a11, a12], [a21, a22]] for square blocks of equal size.
ExactMatrix block2x2(const ExactMatrix& a11, const ExactMatrix& a12, const ExactMatrix& a21,
                     const ExactMatrix& a22);
/// Permutation matrix P with P e_j = e_{perm[j]}; indices are 1-based.
ExactMatrix perm_matrix(std::span<const std::size_t> perm);

}  // namespace sympdec
