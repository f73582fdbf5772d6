#include <catch_amalgamated.hpp>

#include "sympdec/error.hpp"
#include "sympdec/homotopy_tables.hpp"

using namespace sympdec;
using namespace sympdec::homotopy;

namespace {

using Kind = TableAnswer::Kind;

FgAbGroup Z() { return FgAbGroup::integers(); }
FgAbGroup Zk(long k) { return FgAbGroup::cyclic(k); }
FgAbGroup zero() { return FgAbGroup::trivial(); }

void require_group(const TableAnswer& a, const FgAbGroup& g) {
  INFO(a.provenance);
  REQUIRE(a.kind == Kind::Group);
  REQUIRE(a.group == g);
}

}  // namespace

TEST_CASE("symplectic groups", "[homotopy]") {
  for (long n = 1; n <= 4; ++n) require_group(pi_sp(3, n), Z());
  require_group(pi_sp(6, 1), Zk(12));
  require_group(pi_sp(4, 1), Zk(2));
  require_group(pi_sp(5, 1), Zk(2));
  require_group(pi_sp(8, 2), zero());
  require_group(pi_sp(9, 2), zero());
  require_group(pi_sp(10, 2), Zk(120));
  require_group(pi_sp(14, 3), Zk(2 * 5040));
  require_group(pi_sp(0, 1), zero());
  require_group(pi_sp(7, 2), Z());
  REQUIRE(pi_sp(7, 1).kind == Kind::OutOfRange);
  REQUIRE_FALSE(pi_sp(3, 2).provenance.empty());
}

TEST_CASE("symplectic boundary and periodicity invariants", "[homotopy]") {
  for (long n = 1; n <= 12; ++n) {
    REQUIRE(pi_sp(4 * n, n).group == pi_sp(4 * n + 1, n).group);
    for (long i = 0; i + 8 < 4 * n; ++i) REQUIRE(pi_sp(i, n).group == pi_sp(i + 8, n).group);
    for (long i = 0; i < 4 * n; ++i) REQUIRE(pi_sp(i, n).group == pi_sp(i, n + 3).group);
  }
}

TEST_CASE("projective symplectic groups", "[homotopy]") {
  require_group(pi_psp(1, 5), Zk(2));
  require_group(pi_psp(3, 2), Z());
  require_group(pi_psp(0, 2), zero());
  for (long n = 1; n <= 6; ++n) {
    for (long i = 2; i <= 4 * n + 2; ++i) REQUIRE(pi_psp(i, n).group == pi_sp(i, n).group);
  }
}

TEST_CASE("orthogonal groups", "[homotopy]") {
  require_group(pi_so(3, 9), Z());
  require_group(pi_so(1, 9), Zk(2));
  require_group(pi_so(0, 9), zero());
  require_group(pi_o(0, 9), Zk(2));
  require_group(pi_o(7, 13), Z());
  require_group(pi_so(8, 13), Zk(2));
  REQUIRE(pi_so(7, 3).kind == Kind::TorsionOnly);
  REQUIRE(pi_so(11, 5).kind == Kind::TorsionOnly);
  REQUIRE(pi_so(15, 7).kind == Kind::TorsionOnly);
  REQUIRE(pi_so(20, 9).kind == Kind::OutOfRange);
  REQUIRE(pi_so(7, 4).kind == Kind::OutOfRange);
  REQUIRE(pi_o(7, 3).kind == Kind::TorsionOnly);
}

TEST_CASE("unitary and general linear groups", "[homotopy]") {
  require_group(pi_u_gl(3, 4), Z());
  require_group(pi_u_gl(2, 4), zero());
  require_group(pi_u_gl(7, 8), Z());
  REQUIRE(pi_u_gl(8, 4).kind == Kind::OutOfRange);
  REQUIRE(pi_group(Family::GL, 5, 3).group == pi_group(Family::U, 5, 3).group);
}

TEST_CASE("classifying spaces", "[homotopy]") {
  require_group(pi_classifying(Family::PSp, 2, 3), Zk(2));
  require_group(pi_classifying(Family::SO, 1, 5), zero());
  for (long m = 1; m <= 6; ++m) {
    const auto a = pi_classifying(Family::PSp, 4 * m + 4, m);
    require_group(a, Zk(2));
    REQUIRE(a.asserted);
  }
  REQUIRE_THROWS_AS(pi_classifying(Family::Sp, 0, 2), Error);
}

TEST_CASE("shift rule for non-asserted answers", "[homotopy]") {
  for (Family f : {Family::Sp, Family::PSp, Family::O, Family::SO, Family::U, Family::GL}) {
    for (long n = 1; n <= 8; ++n) {
      for (long i = 1; i <= 40; ++i) {
        const auto b = pi_classifying(f, i, n);
        if (b.asserted) continue;
        const auto g = pi_group(f, i - 1, n);
        REQUIRE(b.kind == g.kind);
        REQUIRE(b.group == g.group);
      }
    }
  }
}

TEST_CASE("argument validation and lookup", "[homotopy]") {
  REQUIRE_THROWS_AS(pi_sp(-1, 2), Error);
  REQUIRE_THROWS_AS(pi_so(2, 0), Error);
  REQUIRE(parse_family("psp") == Family::PSp);
  REQUIRE(parse_family("GL") == Family::GL);
  REQUIRE_FALSE(parse_family("spin").has_value());
  REQUIRE(lookup({Family::Sp, 1, 6, Space::Group}).group == Zk(12));
  REQUIRE(lookup({Family::Sp, 1, 7, Space::Classifying}).group == Zk(12));
}
