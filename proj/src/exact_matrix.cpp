#include "sympdec/exact_matrix.hpp"

#include <sstream>
#include <utility>

#include "sympdec/error.hpp"

namespace sympdec {

namespace {

std::string shape(const ExactMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorKind::ShapeMismatch, std::string(op) + ": " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<CycScalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) fail(ErrorKind::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) { return scalar(n, CycScalar(1)); }

ExactMatrix ExactMatrix::scalar(std::size_t n, const CycScalar& s) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = s;
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    fail(ErrorKind::ShapeMismatch, "block out of bounds of " + shape(*this));
  }
  ExactMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  }
  return b;
}

void ExactMatrix::set_block(std::size_t r0, std::size_t c0, const ExactMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    fail(ErrorKind::ShapeMismatch, "set_block out of bounds of " + shape(*this));
  }
  for (std::size_t r = 0; r < b.rows_; ++r) {
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
}

bool ExactMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const CycScalar& x = (*this)(r, c);
      if (r == c ? !x.is_one() : !x.is_zero()) return false;
    }
  }
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  require_same_shape(*this, rhs, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  require_same_shape(*this, rhs, "sub");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) {
    fail(ErrorKind::ShapeMismatch, "mul: " + shape(a) + " * " + shape(b));
  }
  ExactMatrix out(a.rows_, b.cols_);
  // Group elements here are often sparse (permutations, block layouts).
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycScalar& x = a(r, k);
      if (x.is_zero()) continue;
      const bool unit = x.is_one();
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const CycScalar& y = b(k, c);
        if (y.is_zero()) continue;
        if (unit) {
          out(r, c) += y;
        } else {
          out(r, c) += x * y;
        }
      }
    }
  }
  return out;
}

ExactMatrix operator*(const CycScalar& s, const ExactMatrix& m) {
  ExactMatrix out(m.rows_, m.cols_);
  for (std::size_t k = 0; k < m.data_.size(); ++k) {
    if (!m.data_[k].is_zero()) out.data_[k] = s * m.data_[k];
  }
  return out;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::ShapeMismatch, "inverse of non-square " + shape(m));
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) fail(ErrorKind::SingularMatrix, "matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const CycScalar scale = a(col, col).inverse();
    if (!scale.is_one()) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(col, c).is_zero()) a(col, c) *= scale;
        if (!inv(col, c).is_zero()) inv(col, c) *= scale;
      }
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const CycScalar factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= factor * a(col, c);
        if (!inv(col, c).is_zero()) inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

CycScalar determinant(const ExactMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::ShapeMismatch, "determinant of non-square " + shape(m));
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  CycScalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return CycScalar();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const CycScalar inv_pivot = a(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const CycScalar factor = a(r, col) * inv_pivot;
      for (std::size_t c = col; c < n; ++c) {
        if (!a(col, c).is_zero()) a(r, c) -= factor * a(col, c);
      }
    }
  }
  return det;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const CycScalar& x = a(ar, ac);
      if (x.is_zero()) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          const CycScalar& y = b(br, bc);
          if (y.is_zero()) continue;
          out(ar * b.rows() + br, ac * b.cols() + bc) = x * y;
        }
      }
    }
  }
  return out;
}

ExactMatrix block_diag(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

ExactMatrix block_diag(std::span<const ExactMatrix> blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  ExactMatrix out(rows, cols);
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

ExactMatrix block2x2(const ExactMatrix& a11, const ExactMatrix& a12, const ExactMatrix& a21,
                     const ExactMatrix& a22) {
  const std::size_t n = a11.rows();
  for (const ExactMatrix* b : {&a11, &a12, &a21, &a22}) {
    if (b->rows() != n || b->cols() != n) {
      fail(ErrorKind::ShapeMismatch, "block2x2 expects four " + std::to_string(n) + "x" +
                                         std::to_string(n) + " blocks, got " + shape(*b));
    }
  }
  ExactMatrix out(2 * n, 2 * n);
  out.set_block(0, 0, a11);
  out.set_block(0, n, a12);
  out.set_block(n, 0, a21);
  out.set_block(n, n, a22);
  return out;
}

ExactMatrix perm_matrix(std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  ExactMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t target = perm[j];
    if (target < 1 || target > n || seen[target - 1]) {
      fail(ErrorKind::InvalidArgument, "perm_matrix: not a permutation of 1.." + std::to_string(n));
    }
    seen[target - 1] = true;
    p(target - 1, j) = CycScalar(1);
  }
  return p;
}

}  // namespace sympdec
