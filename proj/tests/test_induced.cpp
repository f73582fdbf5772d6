#include <catch_amalgamated.hpp>

#include <functional>

#include "sympdec/error.hpp"
#include "sympdec/induced_maps.hpp"
#include "sympdec/lifting.hpp"

using namespace sympdec;
using namespace sympdec::induced;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

Component comp(const char* label, FgAbGroup g) { return {label, std::move(g), false}; }

AbHom raw(std::vector<Component> src, std::vector<Component> tgt, IntMatrix m) {
  return AbHom{std::move(src), std::move(tgt), std::move(m), "test", "any"};
}

}  // namespace

TEST_CASE("direct sum", "[induced]") {
  const AbHom h = hom_direct_sum(3, 2, 3);
  REQUIRE(h.matrix == IntMatrix{{1, 1}});
  REQUIRE(h.source() == product(FgAbGroup::integers(), FgAbGroup::integers()));
  REQUIRE(hom_direct_sum(4, 1, 1).matrix == IntMatrix{{1, 1}});
  REQUIRE(hom_direct_sum(4, 1, 1).target() == FgAbGroup::cyclic(2));
  REQUIRE(hom_direct_sum(2, 1, 1).matrix.empty());
  REQUIRE(kind_of([] { hom_direct_sum(6, 1, 3); }) == ErrorKind::OutOfRange);
}

TEST_CASE("r-fold sum", "[induced]") {
  REQUIRE(hom_r_fold(3, 2, 1).matrix == IntMatrix{{1}});
  REQUIRE(hom_r_fold(3, 2, 5).matrix == IntMatrix{{5}});
  REQUIRE(hom_r_fold(4, 1, 2).matrix == IntMatrix{{0}});
  REQUIRE(kind_of([] { hom_r_fold(6, 1, 2); }) == ErrorKind::OutOfRange);
}

TEST_CASE("doubling", "[induced]") {
  REQUIRE(hom_doubling(3, 9).matrix == IntMatrix{{2}});
  REQUIRE(hom_doubling(7, 9).matrix == IntMatrix{{2}});
  REQUIRE(hom_doubling(1, 9).matrix.rows() == 0);
  REQUIRE(hom_doubling(1, 9).source() == FgAbGroup::cyclic(2));
  REQUIRE(hom_doubling(4, 9).source().is_trivial());
  REQUIRE(hom_doubling(5, 9).matrix.empty());
  const auto err = kind_of([] { hom_doubling(8, 9); });
  REQUIRE(err == ErrorKind::OutOfRange);
}

TEST_CASE("tensor of symplectic and orthogonal", "[induced]") {
  REQUIRE(hom_tensor_sp_o(3, 2, 5).matrix == IntMatrix{{5, 4}});
  // pi_4 O(9) = 0 in the stable table, so only the Sp(2) factor carries a generator.
  const AbHom h = hom_tensor_sp_o(4, 2, 9);
  REQUIRE(h.matrix == IntMatrix{{1}});
  REQUIRE(h.target() == FgAbGroup::cyclic(2));
  REQUIRE(hom_tensor_sp_o(2, 2, 9).matrix.empty());
  REQUIRE(kind_of([] { hom_tensor_sp_o(10, 2, 20); }) == ErrorKind::OutOfRange);
  REQUIRE(kind_of([] { hom_tensor_sp_o(3, 2, 4); }) == ErrorKind::OutOfRange);
}

TEST_CASE("tensor on the quotient", "[induced]") {
  const AbHom low = hom_tensor_quotient(1, 2, 9);
  REQUIRE(low.matrix == IntMatrix{{0, 0}});
  REQUIRE(low.source() == product(FgAbGroup::cyclic(2), FgAbGroup::cyclic(2)));
  REQUIRE(hom_tensor_quotient(3, 1, 5).matrix == IntMatrix{{5, 2}});
  REQUIRE(hom_tensor_quotient(3, 2, 5).matrix == IntMatrix{{5, 4}});
  const AbHom h5 = hom_tensor_quotient(5, 2, 11);
  REQUIRE(h5.matrix == IntMatrix{{1}});
  REQUIRE(is_isomorphism(h5));
  REQUIRE(kind_of([] { hom_tensor_quotient(3, 2, 4); }) == ErrorKind::EvenN);
  // pi_3 SO(3) lies outside the stable table.
  REQUIRE(kind_of([] { hom_tensor_quotient(3, 1, 3); }) == ErrorKind::OutOfRange);
}

TEST_CASE("tensor of two symplectic groups", "[induced]") {
  REQUIRE(hom_tensor_sp_sp(3, 1, 2).matrix == IntMatrix{{2, 1}});
  REQUIRE(hom_tensor_sp_sp(7, 2, 2).matrix == IntMatrix{{8, 8}});
  REQUIRE(hom_tensor_sp_sp(4, 1, 2).matrix.empty());
  REQUIRE(kind_of([] { hom_tensor_sp_sp(3, 3, 2); }) == ErrorKind::OutOfRange);
}

TEST_CASE("square tensor", "[induced]") {
  REQUIRE(hom_square_tensor(3, 2).matrix == IntMatrix{{4}});
  REQUIRE(hom_square_tensor(7, 2).matrix == IntMatrix{{16}});
  REQUIRE(hom_square_tensor(5, 2).matrix.empty());
  REQUIRE(kind_of([] { hom_square_tensor(6, 1); }) == ErrorKind::OutOfRange);
}

TEST_CASE("consistency of the tensor formula with its two parts", "[induced]") {
  for (long m = 1; m <= 5; ++m) {
    for (long n = 2; n <= 5; ++n) {
      for (long i = 0; i < std::min(4 * m + 2, n - 1); ++i) {
        const AbHom whole = hom_tensor_sp_o(i, m, n);
        const AbHom sum = sum_on_product(hom_r_fold(i, m, n),
                                         compose(hom_r_fold(i, n, m), hom_doubling(i, n)));
        REQUIRE(whole.matrix == sum.matrix);
        REQUIRE(whole.source() == sum.source());
      }
    }
  }
}

TEST_CASE("T tilde", "[induced]") {
  const auto w = lifting::bezout_uv(2, 9);
  const auto cands = hom_Ttilde_candidates(1, 2, 9, w.u, w.v, ZValue::Unknown);
  REQUIRE(cands.size() == 2);
  REQUIRE(cands[0].matrix == IntMatrix{{0, 1}});
  REQUIRE(cands[1].matrix == IntMatrix{{1, 1}});
  REQUIRE(hom_Ttilde(3, 2, 9, w.u, w.v, 0).matrix == IntMatrix{{2 * w.u * 2, w.v}});
  const AbHom nine = hom_Ttilde(1, 2, 19, 6, 5, 0);
  REQUIRE(nine.matrix == IntMatrix{{0, 1}});
  REQUIRE(hom_Ttilde_candidates(3, 2, 9, w.u, w.v, ZValue::Unknown).size() == 1);
  REQUIRE(kind_of([] { hom_Ttilde(3, 2, 9, 1, 1, 0); }) == ErrorKind::BadBezout);
  // i = 1 mod 8 beyond 1: pi_9 PSp(3) = 0 and y |-> v y = y mod 2.
  const auto w2 = lifting::bezout_uv(3, 13);
  const AbHom t9 = hom_Ttilde(9, 3, 13, w2.u, w2.v, 0);
  REQUIRE(t9.source() == FgAbGroup::cyclic(2));
  REQUIRE(t9.matrix == IntMatrix{{1}});
}

TEST_CASE("J matrices", "[induced]") {
  const auto w = lifting::bezout_uv(2, 9);
  const AbHom j4 = hom_J(4, 2, 9, w.u, w.v, 0);
  REQUIRE(j4.matrix == IntMatrix{{9, 4}, {2 * w.u * 2, w.v}});
  REQUIRE(determinant(j4.matrix) == w.sign);
  REQUIRE(is_isomorphism(j4));
  REQUIRE(hom_J(2, 2, 9, w.u, w.v, 0).matrix == IntMatrix{{1, 0}, {0, 1}});
  REQUIRE(hom_J(2, 2, 9, w.u, w.v, 1).matrix == IntMatrix{{1, 0}, {1, 1}});
  const AbHom j6 = hom_J(6, 2, 9, w.u, w.v, 0);
  REQUIRE(j6.matrix == IntMatrix{{1}});
  REQUIRE(is_isomorphism(j6));
  REQUIRE(hom_J_candidates(2, 2, 9, w.u, w.v, ZValue::Unknown).size() == 2);
  REQUIRE_FALSE(is_isomorphism(hom_J(8, 2, 9, w.u, w.v, 0)));
  REQUIRE(kind_of([] { hom_J(4, 2, 8, 1, 1, 0); }) == ErrorKind::EvenN);
  REQUIRE(kind_of([] { hom_J(4, 3, 9, 1, 1, 0); }) == ErrorKind::NotCoprime);
  REQUIRE(kind_of([&] { hom_J(9, 2, 9, w.u, w.v, 0); }) == ErrorKind::OutOfRange);
  REQUIRE(kind_of([&] { hom_J(0, 2, 9, w.u, w.v, 0); }) == ErrorKind::OutOfRange);
}

TEST_CASE("isomorphism tests", "[induced]") {
  const auto z = comp("Z", FgAbGroup::integers());
  const auto z2 = comp("Z/2", FgAbGroup::cyclic(2));
  REQUIRE(is_isomorphism(raw({z2}, {z2}, IntMatrix{{1}})));
  REQUIRE(is_isomorphism(raw({z, z}, {z, z}, IntMatrix{{2, 1}, {1, 1}})));
  REQUIRE_FALSE(is_isomorphism(raw({z, z}, {z, z}, IntMatrix{{2, 0}, {0, 1}})));
  REQUIRE(is_injective(raw({z, z}, {z, z}, IntMatrix{{2, 0}, {0, 1}})));
  REQUIRE_FALSE(is_surjective(raw({z}, {z}, IntMatrix{{3}})));
  REQUIRE(is_surjective(raw({z}, {z2}, IntMatrix{{1}})));
  REQUIRE_FALSE(is_injective(raw({z}, {z2}, IntMatrix{{1}})));
  // Z/6 -> Z/2 x Z/3 by (1, 1) is an isomorphism.
  const auto z6 = comp("Z/6", FgAbGroup::cyclic(6));
  const auto z3 = comp("Z/3", FgAbGroup::cyclic(3));
  REQUIRE(is_isomorphism(raw({z6}, {z2, z3}, IntMatrix{{1}, {1}})));
  REQUIRE_FALSE(is_injective(raw({z6}, {z3}, IntMatrix{{1}})));
  REQUIRE(is_injective(raw({z2}, {z6}, IntMatrix{{3}})));
}

TEST_CASE("well-definedness", "[induced]") {
  const auto z = comp("Z", FgAbGroup::integers());
  const auto z2 = comp("Z/2", FgAbGroup::cyclic(2));
  const auto z4 = comp("Z/4", FgAbGroup::cyclic(4));
  REQUIRE_FALSE(is_well_defined(raw({z2}, {z}, IntMatrix{{1}})));
  REQUIRE_FALSE(is_well_defined(raw({z2}, {z4}, IntMatrix{{1}})));
  REQUIRE(is_well_defined(raw({z2}, {z4}, IntMatrix{{2}})));
  REQUIRE_FALSE(is_well_defined(raw({z}, {z}, IntMatrix{{1, 1}})));
  REQUIRE(kind_of([&] { is_surjective(raw({z2}, {z}, IntMatrix{{1}})); }) ==
          ErrorKind::MalformedHom);
  // The builder forces torsion-to-Z entries to zero.
  const AbHom h = hom_from_coefficients({z2, z}, {z}, {{Integer(3), Integer(2)}}, "t", "r");
  REQUIRE(h.matrix == IntMatrix{{0, 2}});
}

TEST_CASE("image descriptions", "[induced]") {
  const auto z = comp("Z", FgAbGroup::integers());
  const auto z2 = comp("Z/2", FgAbGroup::cyclic(2));
  const auto img = image_description(
      hom_from_coefficients({z2, z}, {z}, {{Integer(13), Integer(2)}}, "t", "r"));
  REQUIRE(img.cyclic_index == Integer(2));
  REQUIRE(img.to_string() == "2Z");
  REQUIRE(img.cokernel == FgAbGroup::cyclic(2));
  REQUIRE_FALSE(img.surjective);
  const auto full = image_description(raw({z, z}, {z}, IntMatrix{{9, 4}}));
  REQUIRE(full.surjective);
  REQUIRE(full.to_string() == "Z");
  const auto none = image_description(raw({z2}, {z2}, IntMatrix{{0}}));
  REQUIRE(none.to_string() == "0");
  const Component unknown{"finite", FgAbGroup{}, true};
  const auto tors = image_description(
      hom_from_coefficients({z, unknown}, {z}, {{Integer(3), Integer(0)}}, "t", "r"));
  REQUIRE(tors.to_string() == "3Z");
  REQUIRE(kind_of([&] { is_injective(raw({z, unknown}, {z}, IntMatrix{{3}})); }) ==
          ErrorKind::MalformedHom);
  REQUIRE(kind_of([&] { image_description(raw({unknown}, {z2}, IntMatrix(1, 0))); }) ==
          ErrorKind::MalformedHom);
}

TEST_CASE("composition and diagonal", "[induced]") {
  for (long m = 1; m <= 4; ++m) {
    for (long i = 0; i < 4 * m + 2; ++i) {
      if (i >= 4 * m * m - 1) continue;
      const AbHom sq = hom_square_tensor(i, m);
      const AbHom both = hom_tensor_sp_sp(i, m, m);
      const AbHom viadiag = compose(both, diagonal(both.source_parts.at(0)));
      REQUIRE(sq.matrix == viadiag.matrix);
    }
  }
  REQUIRE(kind_of([] { compose(hom_r_fold(3, 1, 2), hom_r_fold(4, 1, 2)); }) ==
          ErrorKind::MalformedHom);
}
