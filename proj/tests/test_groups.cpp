#include <catch_amalgamated.hpp>

#include <functional>

#include "sympdec/classical_groups.hpp"
#include "sympdec/error.hpp"

using namespace sympdec;
using namespace sympdec::groups;

namespace {

ExactMatrix eye(std::size_t n) { return ExactMatrix::identity(n); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("membership predicates", "[groups]") {
  for (std::size_t m = 1; m <= 3; ++m) {
    REQUIRE(is_symplectic(eye(2 * m)));
    REQUIRE(is_symplectic(standard_symplectic_form(m)));
  }
  REQUIRE(is_symplectic(ExactMatrix{{2, 0}, {0, CycScalar(Rational(1, 2))}}));
  REQUIRE_FALSE(is_symplectic(ExactMatrix{{2, 0}, {0, 1}}));
  REQUIRE(kind_of([] { is_symplectic(ExactMatrix(3, 3)); }) == ErrorKind::ShapeMismatch);
  REQUIRE(kind_of([] { is_symplectic(ExactMatrix(2, 4)); }) == ErrorKind::ShapeMismatch);

  const ExactMatrix refl{{1, 0}, {0, -1}};
  REQUIRE(is_orthogonal(refl));
  REQUIRE_FALSE(is_special_orthogonal(refl));
  REQUIRE(is_special_orthogonal(eye(3)));
}

TEST_CASE("symplectic form identities", "[groups]") {
  for (std::size_t m = 1; m <= 3; ++m) {
    const ExactMatrix j = standard_symplectic_form(m);
    REQUIRE(j * j == -eye(2 * m));
    REQUIRE(j.transpose() == -j);
  }
}

TEST_CASE("gram and block routes agree on members and perturbed candidates", "[groups]") {
  Rng rng(1);
  for (int k = 0; k < 40; ++k) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    const ExactMatrix a = random_sp(m, rng);
    const auto good = symplectic_checks(a);
    REQUIRE(good.gram);
    REQUIRE(good.blocks);
    const auto bad = symplectic_checks(perturb_entry(a, rng));
    REQUIRE(bad.gram == bad.blocks);
  }
  // Adding 1 to an entry of the identity is a shear for some positions.
  ExactMatrix shear = eye(2);
  shear(0, 1) += CycScalar(1);
  REQUIRE(is_symplectic(shear));
}

TEST_CASE("direct sums", "[groups]") {
  REQUIRE(direct_sum_sp(eye(2), eye(2)) == eye(4));
  Rng rng(3);
  const ExactMatrix a = random_sp(1, rng);
  const ExactMatrix b = random_sp(2, rng);
  const ExactMatrix s = direct_sum_sp(a, b);
  REQUIRE(is_symplectic(s));
  // Interleaved layout: A's blocks sit at rows/cols {0, 3}, B's at {1, 2, 4, 5}.
  REQUIRE(s(0, 0) == a(0, 0));
  REQUIRE(s(0, 3) == a(0, 1));
  REQUIRE(s(3, 0) == a(1, 0));
  REQUIRE(s(1, 1) == b(0, 0));
  REQUIRE(s(1, 4) == b(0, 2));
  REQUIRE(s(0, 1).is_zero());
  REQUIRE(direct_sum_sp(a, eye(4)) == stabilize(a, 2));
  REQUIRE(kind_of([&] { direct_sum_sp(ExactMatrix{{2, 0}, {0, 1}}, a); }) ==
          ErrorKind::NotInGroup);
}

TEST_CASE("r-fold sums", "[groups]") {
  Rng rng(4);
  const ExactMatrix a = random_sp(2, rng);
  REQUIRE(r_fold_sum_sp(a, 1) == a);
  REQUIRE(r_fold_sum_sp(eye(2), 2) == eye(4));
  const ExactMatrix a3 = r_fold_sum_sp(a, 3);
  REQUIRE(is_symplectic(a3));
  REQUIRE(a3 == direct_sum_sp(a, direct_sum_sp(a, a)));
}

TEST_CASE("j-th stabilization", "[groups]") {
  Rng rng(5);
  const ExactMatrix a = random_sp(2, rng);
  REQUIRE(stabilization_sj(a, 1, 3) == stabilize(a, 4));
  for (std::size_t j = 1; j <= 3; ++j) {
    REQUIRE(stabilization_sj(eye(4), j, 3) == eye(12));
    REQUIRE(is_symplectic(stabilization_sj(a, j, 3)));
  }
  REQUIRE(kind_of([&] { stabilization_sj(a, 0, 3); }) == ErrorKind::IndexOutOfRange);
  REQUIRE(kind_of([&] { stabilization_sj(a, 4, 3); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("stabilization conjugation identity", "[groups]") {
  Rng rng(6);
  REQUIRE(verify_sj_conjugation(random_sp(1, rng), 1, 2));
  REQUIRE(verify_sj_conjugation(eye(2), 1, 2));
  REQUIRE(verify_sj_conjugation(random_sp(1, rng), 2, 3));
  REQUIRE(verify_sj_conjugation(random_sp(2, rng), 1, 3));
  const ExactMatrix p = transposition_perm(1, 2, 2);
  REQUIRE(p * p == eye(4));
  REQUIRE(kind_of([&] { verify_sj_conjugation(eye(2), 2, 2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("doubling", "[groups]") {
  REQUIRE(doubling(eye(3)) == eye(6));
  const ExactMatrix refl{{1, 0}, {0, -1}};
  REQUIRE(is_symplectic(doubling(refl)));
  Rng rng(7);
  const ExactMatrix o = random_o(3, rng);
  REQUIRE(doubling(o) == block_diag(o, o));
  REQUIRE(is_symplectic(doubling(o)));
  REQUIRE(kind_of([] { doubling(ExactMatrix{{2}}); }) == ErrorKind::NotInGroup);
}

TEST_CASE("tensor of symplectic and orthogonal", "[groups]") {
  REQUIRE(tensor_sp_o(eye(4), eye(3)) == eye(12));
  REQUIRE(tensor_sp_o(-eye(4), eye(3)) == -eye(12));
  REQUIRE(kron(standard_symplectic_form(2), eye(3)) == standard_symplectic_form(6));
  Rng rng(8);
  for (int k = 0; k < 10; ++k) {
    const auto m = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
    const ExactMatrix a = random_sp(m, rng);
    const ExactMatrix b = random_o(n, rng);
    const ExactMatrix t = tensor_sp_o(a, b);
    REQUIRE(is_symplectic(t));
    REQUIRE(tensor_sp_o(a, eye(n)) == left_tensor(a, n));
    REQUIRE(tensor_sp_o(eye(2 * m), b) == right_tensor(m, b));
    REQUIRE(left_tensor(a, n) * right_tensor(m, b) == t);
  }
}

TEST_CASE("orthonormalizing change of basis", "[groups]") {
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 2}, {2, 1}}) {
    const ExactMatrix p = change_of_basis_P(m, n);
    const ExactMatrix g = skew_skew_gram(m, n);
    REQUIRE(g == kron(standard_symplectic_form(m), standard_symplectic_form(n)));
    REQUIRE(p.transpose() * g * p == eye(4 * m * n));
  }
  REQUIRE(tensor_sp_sp(eye(2), eye(2)) == eye(4));
  Rng rng(9);
  for (int k = 0; k < 5; ++k) {
    const ExactMatrix t = tensor_sp_sp(random_sp(1, rng), random_sp(1, rng));
    REQUIRE(is_orthogonal(t));
  }
}

TEST_CASE("block permutation lemma", "[groups]") {
  Rng rng(10);
  REQUIRE(block_perm_Pmn(3, 1) == eye(3));
  REQUIRE(left_tensor(random_sp(1, rng), 1).rows() == 2);
  REQUIRE(verify_L_conjugation(random_sp(1, rng), 2));
  REQUIRE(verify_L_conjugation(random_sp(2, rng), 3));
  REQUIRE(verify_L_conjugation(random_sp(2, rng), 1));
  // Columns e_1, e_{n+1}, ..., then e_2, ... for m = 2, n = 3.
  const ExactMatrix p = block_perm_Pmn(2, 3);
  REQUIRE(p(0, 0) == CycScalar(1));
  REQUIRE(p(3, 1) == CycScalar(1));
  REQUIRE(p(1, 2) == CycScalar(1));
}

TEST_CASE("mixed product", "[groups]") {
  Rng rng(12);
  REQUIRE(verify_mixed_product(eye(2), eye(3)));
  REQUIRE(verify_mixed_product(random_square(2, rng), random_square(3, rng)));
  REQUIRE(verify_mixed_product(ExactMatrix{{3}}, ExactMatrix{{CycScalar::zeta()}}));
}

TEST_CASE("seeded generators", "[groups]") {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 123456789ULL}) {
    REQUIRE(is_symplectic(random_sp(2, seed)));
    REQUIRE(determinant(random_so(3, seed)) == CycScalar(1));
    REQUIRE(random_sp(2, seed) == random_sp(2, seed));
    REQUIRE(random_so(3, seed) == random_so(3, seed));
  }
  REQUIRE_FALSE(random_sp(2, 1) == random_sp(2, 2));
}

TEST_CASE("group element wrapper", "[groups]") {
  REQUIRE(belongs({eye(4), GroupKind::Sp, 2}));
  REQUIRE_FALSE(belongs({ExactMatrix{{1, 0}, {0, -1}}, GroupKind::SO, 2}));
  REQUIRE(belongs({ExactMatrix{{1, 0}, {0, -1}}, GroupKind::O, 2}));
}
