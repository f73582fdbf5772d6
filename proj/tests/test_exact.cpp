#include <catch_amalgamated.hpp>

#include "sympdec/ab_group.hpp"
#include "sympdec/cyclotomic.hpp"
#include "sympdec/error.hpp"
#include "sympdec/exact_matrix.hpp"
#include "sympdec/int_matrix.hpp"
#include "sympdec/random.hpp"
#include "sympdec/smith.hpp"

using namespace sympdec;

namespace {

CycScalar random_scalar(Rng& rng) {
  std::array<Rational, 4> c;
  for (auto& x : c) x = Rational(rng.uniform(-5, 5), rng.uniform(1, 4));
  return CycScalar(c);
}

IntMatrix random_int_matrix(std::size_t rows, std::size_t cols, Rng& rng, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(-bound, bound);
  }
  return m;
}

void require_smith(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  REQUIRE(s.U * m * s.V == s.D);
  REQUIRE(s.D.is_diagonal());
  REQUIRE(is_unimodular(s.U));
  REQUIRE(is_unimodular(s.V));
  const auto d = s.diagonal();
  for (std::size_t k = 0; k < d.size(); ++k) {
    REQUIRE(d[k] >= 0);
    if (k + 1 < d.size() && !d[k].is_zero()) REQUIRE(Integer(d[k + 1] % d[k]).is_zero());
    if (d[k].is_zero()) {
      for (std::size_t l = k; l < d.size(); ++l) REQUIRE(d[l].is_zero());
    }
  }
}

}  // namespace

TEST_CASE("cyclotomic constants", "[exact][cyclotomic]") {
  const CycScalar z = CycScalar::zeta();
  REQUIRE(z * z * z * z == CycScalar(-1));
  REQUIRE(CycScalar::imag_unit() * CycScalar::imag_unit() == CycScalar(-1));
  REQUIRE(CycScalar::sqrt2() * CycScalar::sqrt2() == CycScalar(2));
  REQUIRE((CycScalar::sqrt2() * CycScalar::inv_sqrt2()).is_one());
  REQUIRE(CycScalar(3).is_rational());
  REQUIRE_FALSE(z.is_rational());
}

TEST_CASE("cyclotomic inverse", "[exact][cyclotomic]") {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const CycScalar a = random_scalar(rng);
    if (a.is_zero()) continue;
    REQUIRE((a * a.inverse()).is_one());
    const CycScalar b = random_scalar(rng);
    REQUIRE((b / a) * a == b);
  }
  REQUIRE_THROWS_AS(CycScalar(0).inverse(), Error);
  try {
    (void)(CycScalar(1) / CycScalar(0));
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("cyclotomic field axioms on samples", "[exact][cyclotomic]") {
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const CycScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * b == b * a);
    REQUIRE(a - a == CycScalar(0));
  }
}

TEST_CASE("cyclotomic printing", "[exact][cyclotomic]") {
  REQUIRE(CycScalar(0).to_string() == "0");
  REQUIRE(CycScalar::inv_sqrt2().to_string().find('z') != std::string::npos);
}

TEST_CASE("exact matrix inverse and determinant", "[exact][matrix]") {
  const ExactMatrix a{{2, 1}, {1, 1}};
  REQUIRE(inverse(a) * a == ExactMatrix::identity(2));
  REQUIRE(determinant(a) == CycScalar(1));
  const ExactMatrix singular{{1, 2}, {2, 4}};
  REQUIRE(determinant(singular).is_zero());
  try {
    inverse(singular);
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::SingularMatrix);
  }
  try {
    inverse(ExactMatrix(2, 3));
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::ShapeMismatch);
  }
}

TEST_CASE("exact matrix with irrational entries", "[exact][matrix]") {
  const CycScalar s = CycScalar::inv_sqrt2();
  const CycScalar i = CycScalar::imag_unit();
  const ExactMatrix u{{s, i * s}, {s, -(i * s)}};
  const ExactMatrix inv = inverse(u);
  REQUIRE(u * inv == ExactMatrix::identity(2));
  REQUIRE(inv * u == ExactMatrix::identity(2));
}

TEST_CASE("kronecker product", "[exact][matrix]") {
  const ExactMatrix a{{1, 2}, {3, 4}};
  const ExactMatrix b{{0, 1}, {1, 0}};
  const ExactMatrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k(0, 1) == CycScalar(1));
  REQUIRE(k(2, 3) == CycScalar(4));
  REQUIRE(k(2, 1) == CycScalar(3));
  REQUIRE(determinant(k) == determinant(a) * determinant(a) * determinant(b) * determinant(b));
  REQUIRE(kron(ExactMatrix::identity(1), a) == a);
}

TEST_CASE("block helpers and permutations", "[exact][matrix]") {
  const ExactMatrix a{{1, 2}, {3, 4}};
  const ExactMatrix d = block_diag(a, ExactMatrix::identity(1));
  REQUIRE(d.rows() == 3);
  REQUIRE(d.block(0, 0, 2, 2) == a);
  REQUIRE(d(2, 2) == CycScalar(1));
  REQUIRE(d(0, 2).is_zero());
  const std::size_t perm[] = {2, 3, 1};
  const ExactMatrix p = perm_matrix(perm);
  REQUIRE(p(1, 0) == CycScalar(1));
  REQUIRE(p(2, 1) == CycScalar(1));
  REQUIRE(p(0, 2) == CycScalar(1));
  REQUIRE(p * p.transpose() == ExactMatrix::identity(3));
  const ExactMatrix z = ExactMatrix::zero(2, 2);
  REQUIRE(block2x2(a, z, z, a) == block_diag(a, a));
}

TEST_CASE("integer determinant", "[exact][int]") {
  REQUIRE(determinant(IntMatrix{{2, 0}, {0, 3}}) == 6);
  REQUIRE(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  REQUIRE(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  REQUIRE(is_unimodular(IntMatrix{{2, 1}, {1, 1}}));
  REQUIRE_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("smith normal form known cases", "[exact][smith]") {
  const SmithForm s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  REQUIRE(s.diagonal() == std::vector<Integer>{2, 6, 12});
  require_smith(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});

  const SmithForm t = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  REQUIRE(t.diagonal() == std::vector<Integer>{1, 6});
  REQUIRE(smith_normal_form(IntMatrix(2, 2)).rank() == 0);
  require_smith(IntMatrix{{0, 0, 5}});
}

TEST_CASE("smith normal form properties on random matrices", "[exact][smith]") {
  Rng rng(2024);
  for (int k = 0; k < 60; ++k) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 4));
    require_smith(random_int_matrix(rows, cols, rng, 9));
  }
}

TEST_CASE("kernel basis", "[exact][smith]") {
  Rng rng(99);
  for (int k = 0; k < 40; ++k) {
    const IntMatrix m = random_int_matrix(2, 4, rng, 6);
    const IntMatrix ker = kernel_basis(m);
    REQUIRE((m * ker).is_zero());
    REQUIRE(ker.cols() == 4 - smith_normal_form(m).rank());
  }
  REQUIRE(kernel_basis(IntMatrix{{1, 0}, {0, 1}}).cols() == 0);
}

TEST_CASE("finitely generated abelian groups", "[exact][group]") {
  const FgAbGroup z6({Integer(6)});
  const FgAbGroup z2z3({Integer(2), Integer(3)});
  REQUIRE(z2z3.isomorphic_to(z6));
  REQUIRE_FALSE(FgAbGroup({Integer(2), Integer(2)}).isomorphic_to(FgAbGroup::cyclic(4)));
  REQUIRE(FgAbGroup({Integer(1)}).is_trivial());
  REQUIRE(FgAbGroup::trivial().to_string() == "0");
  REQUIRE(product(FgAbGroup::integers(), FgAbGroup::cyclic(2)).to_string() == "Z x Z/2");
  REQUIRE(product(FgAbGroup::integers(), FgAbGroup::cyclic(2)).rank() == 1);
  REQUIRE(FgAbGroup({Integer(4), Integer(0), Integer(6)}).canonical().orders() ==
          std::vector<Integer>{2, 12, 0});
  REQUIRE_THROWS_AS(FgAbGroup({Integer(-2)}), Error);
}

TEST_CASE("seed derivation is stable", "[exact][random]") {
  REQUIRE(derive_seed(1, 0) == derive_seed(1, 0));
  REQUIRE(derive_seed(1, 0) != derive_seed(1, 1));
  Rng a(5), b(5);
  for (int k = 0; k < 10; ++k) REQUIRE(a.uniform(-3, 3) == b.uniform(-3, 3));
}
