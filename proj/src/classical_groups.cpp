#include "sympdec/classical_groups.hpp"

#include <vector>

#include "sympdec/error.hpp"

namespace sympdec::groups {

namespace {

std::string dims(const ExactMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_sp(const ExactMatrix& a, const char* op) {
  if (!a.is_square() || a.rows() % 2 != 0 || !is_symplectic(a)) {
    fail(ErrorKind::NotInGroup, std::string(op) + ": " + dims(a) + " input is not in Sp");
  }
}

void require_o(const ExactMatrix& a, const char* op) {
  if (!is_orthogonal(a)) {
    fail(ErrorKind::NotInGroup, std::string(op) + ": " + dims(a) + " input is not in O");
  }
}

bool is_symmetric(const ExactMatrix& m) { return m == m.transpose(); }

// r copies of x along the diagonal.
ExactMatrix repeat_diag(const ExactMatrix& x, std::size_t r) {
  const std::vector<ExactMatrix> copies(r, x);
  return block_diag(copies);
}

// x at diagonal block j (1-based) of r, other diagonal blocks filled with
// `fill` (identity or zero).
ExactMatrix place_block(const ExactMatrix& x, std::size_t j, std::size_t r, bool identity_fill) {
  const std::size_t n = x.rows();
  const ExactMatrix fill = identity_fill ? ExactMatrix::identity(n) : ExactMatrix::zero(n, n);
  std::vector<ExactMatrix> blocks(r, fill);
  blocks[j - 1] = x;
  return block_diag(blocks);
}

CycScalar small_gaussian(Rng& rng, long bound) {
  return CycScalar(rng.uniform(-bound, bound)) +
         CycScalar(rng.uniform(-bound, bound)) * CycScalar::imag_unit();
}

}  // namespace

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Sp: return "Sp";
    case GroupKind::O: return "O";
    case GroupKind::SO: return "SO";
    case GroupKind::GL: return "GL";
  }
  return "?";
}

bool belongs(const GroupElement& g) {
  switch (g.group) {
    case GroupKind::Sp:
      return g.matrix.rows() == 2 * g.size && g.matrix.is_square() && is_symplectic(g.matrix);
    case GroupKind::O:
      return g.matrix.rows() == g.size && is_orthogonal(g.matrix);
    case GroupKind::SO:
      return g.matrix.rows() == g.size && is_special_orthogonal(g.matrix);
    case GroupKind::GL:
      return g.matrix.rows() == g.size && g.matrix.is_square() &&
             !determinant(g.matrix).is_zero();
  }
  return false;
}

ExactMatrix standard_symplectic_form(std::size_t m) {
  return block2x2(ExactMatrix::zero(m, m), ExactMatrix::identity(m), -ExactMatrix::identity(m),
                  ExactMatrix::zero(m, m));
}

Blocks split_blocks(const ExactMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) {
    fail(ErrorKind::ShapeMismatch, "expected a square matrix of even size, got " + dims(m));
  }
  const std::size_t h = m.rows() / 2;
  return {m.block(0, 0, h, h), m.block(0, h, h, h), m.block(h, 0, h, h), m.block(h, h, h, h)};
}

SymplecticCheck symplectic_checks(const ExactMatrix& m) {
  const Blocks b = split_blocks(m);
  const std::size_t h = m.rows() / 2;
  const ExactMatrix j = standard_symplectic_form(h);
  SymplecticCheck out;
  out.gram = m.transpose() * j * m == j;
  out.blocks = is_symmetric(b.a11.transpose() * b.a21) && is_symmetric(b.a12.transpose() * b.a22) &&
               (b.a11.transpose() * b.a22 - b.a21.transpose() * b.a12).is_identity();
  return out;
}

bool is_symplectic(const ExactMatrix& m) {
  const SymplecticCheck c = symplectic_checks(m);
  if (c.gram != c.blocks) {
    throw std::logic_error("symplectic Gram and block criteria disagree on " + m.to_string());
  }
  return c.gram;
}

bool is_orthogonal(const ExactMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::ShapeMismatch, "orthogonality of non-square " + dims(m));
  return (m.transpose() * m).is_identity();
}

bool is_special_orthogonal(const ExactMatrix& m) {
  return is_orthogonal(m) && determinant(m).is_one();
}

ExactMatrix direct_sum_sp(const ExactMatrix& a, const ExactMatrix& b) {
  require_sp(a, "direct_sum_sp");
  require_sp(b, "direct_sum_sp");
  const Blocks x = split_blocks(a);
  const Blocks y = split_blocks(b);
  return block2x2(block_diag(x.a11, y.a11), block_diag(x.a12, y.a12), block_diag(x.a21, y.a21),
                  block_diag(x.a22, y.a22));
}

ExactMatrix r_fold_sum_sp(const ExactMatrix& a, std::size_t r) {
  if (r == 0) fail(ErrorKind::InvalidArgument, "r_fold_sum_sp: r must be positive");
  require_sp(a, "r_fold_sum_sp");
  const Blocks x = split_blocks(a);
  return block2x2(repeat_diag(x.a11, r), repeat_diag(x.a12, r), repeat_diag(x.a21, r),
                  repeat_diag(x.a22, r));
}

ExactMatrix stabilize(const ExactMatrix& a, std::size_t extra) {
  if (extra == 0) {
    require_sp(a, "stabilize");
    return a;
  }
  return direct_sum_sp(a, ExactMatrix::identity(2 * extra));
}

ExactMatrix stabilization_sj(const ExactMatrix& a, std::size_t j, std::size_t r) {
  if (j < 1 || j > r) {
    fail(ErrorKind::IndexOutOfRange,
         "stabilization_sj: j=" + std::to_string(j) + " outside 1.." + std::to_string(r));
  }
  require_sp(a, "stabilization_sj");
  const Blocks x = split_blocks(a);
  return block2x2(place_block(x.a11, j, r, true), place_block(x.a12, j, r, false),
                  place_block(x.a21, j, r, false), place_block(x.a22, j, r, true));
}

ExactMatrix transposition_perm(std::size_t j, std::size_t n, std::size_t r) {
  if (j < 1 || j + 1 > r) {
    fail(ErrorKind::IndexOutOfRange,
         "transposition_perm: j=" + std::to_string(j) + " outside 1.." + std::to_string(r - 1));
  }
  std::vector<std::size_t> perm(r * n);
  for (std::size_t k = 0; k < r * n; ++k) perm[k] = k + 1;
  const std::size_t first = (j - 1) * n;
  for (std::size_t k = 0; k < n; ++k) std::swap(perm[first + k], perm[first + n + k]);
  return perm_matrix(perm);
}

bool verify_sj_conjugation(const ExactMatrix& a, std::size_t j, std::size_t r) {
  const std::size_t n = a.rows() / 2;
  const ExactMatrix p = transposition_perm(j, n, r);
  const ExactMatrix pp = block_diag(p, p);
  return stabilization_sj(a, j + 1, r) == pp * stabilization_sj(a, j, r) * pp;
}

ExactMatrix doubling(const ExactMatrix& a) {
  require_o(a, "doubling");
  return block_diag(a, a);
}

ExactMatrix left_tensor(const ExactMatrix& a, std::size_t n) {
  return kron(a, ExactMatrix::identity(n));
}

ExactMatrix right_tensor(std::size_t m, const ExactMatrix& b) {
  return kron(ExactMatrix::identity(2 * m), b);
}

ExactMatrix tensor_sp_o(const ExactMatrix& a, const ExactMatrix& b) {
  require_sp(a, "tensor_sp_o");
  require_o(b, "tensor_sp_o");
  return kron(a, b);
}

ExactMatrix skew_skew_gram(std::size_t m, std::size_t n) {
  return kron(standard_symplectic_form(m), standard_symplectic_form(n));
}

ExactMatrix change_of_basis_P(std::size_t m, std::size_t n) {
  const ExactMatrix g = skew_skew_gram(m, n);
  const std::size_t size = g.rows();
  const CycScalar s = CycScalar::inv_sqrt2();
  const CycScalar is = CycScalar::imag_unit() * s;
  ExactMatrix p(size, size);
  std::vector<bool> used(size, false);
  std::size_t col = 0;
  for (std::size_t a = 0; a < size; ++a) {
    if (used[a]) continue;
    std::size_t partner = size;
    for (std::size_t r = 0; r < size; ++r) {
      if (!g(r, a).is_zero()) partner = r;
    }
    if (partner == size || partner == a) {
      throw std::logic_error("skew (x) skew Gram matrix is not a fixed-point-free involution");
    }
    const CycScalar eps = g(partner, a);
    used[a] = used[partner] = true;
    p(a, col) = s;
    p(partner, col) = eps * s;
    p(a, col + 1) = is;
    p(partner, col + 1) = -(eps * is);
    col += 2;
  }
  return p;
}

ExactMatrix tensor_sp_sp(const ExactMatrix& a, const ExactMatrix& b) {
  require_sp(a, "tensor_sp_sp");
  require_sp(b, "tensor_sp_sp");
  const std::size_t m = a.rows() / 2;
  const std::size_t n = b.rows() / 2;
  const ExactMatrix p = change_of_basis_P(m, n);
  // P^T G P = I gives P^{-1} = P^T G.
  const ExactMatrix p_inv = p.transpose() * skew_skew_gram(m, n);
  return p_inv * kron(a, b) * p;
}

ExactMatrix block_perm_Pmn(std::size_t m, std::size_t n) {
  std::vector<std::size_t> perm;
  perm.reserve(m * n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = 0; l < m; ++l) perm.push_back(l * n + k);
  }
  return perm_matrix(perm);
}

bool verify_L_conjugation(const ExactMatrix& a, std::size_t n) {
  const std::size_t m = a.rows() / 2;
  const ExactMatrix p = block_perm_Pmn(m, n);
  const ExactMatrix p_inv = p.transpose();
  // Blockwise A_ij (x) I_n, which for this Kronecker ordering is A (x) I_n.
  const Blocks x = split_blocks(a);
  const ExactMatrix lifted =
      block2x2(kron(x.a11, ExactMatrix::identity(n)), kron(x.a12, ExactMatrix::identity(n)),
               kron(x.a21, ExactMatrix::identity(n)), kron(x.a22, ExactMatrix::identity(n)));
  if (lifted != left_tensor(a, n)) return false;
  return lifted == block_diag(p, p) * r_fold_sum_sp(a, n) * block_diag(p_inv, p_inv);
}

bool verify_mixed_product(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_square() || !b.is_square()) {
    fail(ErrorKind::ShapeMismatch, "verify_mixed_product expects square inputs");
  }
  const ExactMatrix lhs = kron(a, b);
  const ExactMatrix rhs =
      kron(a, ExactMatrix::identity(b.rows())) * kron(ExactMatrix::identity(a.rows()), b);
  return lhs == rhs;
}

ExactMatrix random_sp(std::size_t m, Rng& rng) {
  ExactMatrix s1(m, m);
  ExactMatrix s2(m, m);
  ExactMatrix lower = ExactMatrix::identity(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = r; c < m; ++c) {
      s1(r, c) = s1(c, r) = small_gaussian(rng, 1);
      s2(r, c) = s2(c, r) = small_gaussian(rng, 1);
    }
    for (std::size_t c = 0; c < r; ++c) lower(r, c) = small_gaussian(rng, 1);
  }
  const ExactMatrix id = ExactMatrix::identity(m);
  const ExactMatrix zero = ExactMatrix::zero(m, m);
  const ExactMatrix upper_shear = block2x2(id, s1, zero, id);
  const ExactMatrix lower_shear = block2x2(id, zero, s2, id);
  const ExactMatrix levi = block2x2(lower, zero, zero, inverse(lower).transpose());
  return upper_shear * lower_shear * levi;
}

ExactMatrix random_sp(std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  return random_sp(m, rng);
}

ExactMatrix random_so(std::size_t n, Rng& rng) {
  const ExactMatrix id = ExactMatrix::identity(n);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ExactMatrix k(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r + 1; c < n; ++c) {
        k(r, c) = small_gaussian(rng, 1);
        k(c, r) = -k(r, c);
      }
    }
    const ExactMatrix denom = id - k;
    if (determinant(denom).is_zero()) continue;
    return (id + k) * inverse(denom);
  }
  throw std::runtime_error("random_so: no nonsingular Cayley draw in 1000 attempts");
}

ExactMatrix random_so(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_so(n, rng);
}

ExactMatrix random_o(std::size_t n, Rng& rng) {
  ExactMatrix q = random_so(n, rng);
  if (rng.coin()) {
    for (std::size_t r = 0; r < n; ++r) q(r, n - 1) = -q(r, n - 1);
  }
  return q;
}

ExactMatrix random_square(std::size_t n, Rng& rng) {
  ExactMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = small_gaussian(rng, 2);
  }
  return a;
}

ExactMatrix perturb_entry(const ExactMatrix& m, Rng& rng) {
  ExactMatrix out = m;
  const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m.rows()) - 1));
  const auto c = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m.cols()) - 1));
  out(r, c) += CycScalar(1);
  return out;
}

}  // namespace sympdec::groups
