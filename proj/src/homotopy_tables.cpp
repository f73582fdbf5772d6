#include "sympdec/homotopy_tables.hpp"

#include <array>

#include "sympdec/error.hpp"

namespace sympdec::homotopy {

namespace {

// 8-periodic stable values, indexed by i mod 8; -1 marks Z, 0 trivial, 2 Z/2.
constexpr std::array<int, 8> kSpStable = {0, 0, 0, -1, 2, 2, 0, -1};
constexpr std::array<int, 8> kOStable = {2, 2, 0, -1, 0, 0, 0, -1};

FgAbGroup from_code(int code) {
  if (code == -1) return FgAbGroup::integers();
  if (code == 0) return FgAbGroup::trivial();
  return FgAbGroup::cyclic(code);
}

void check_args(long i, long n) {
  if (i < 0) fail(ErrorKind::InvalidArgument, "degree i must be >= 0, got " + std::to_string(i));
  if (n < 1) fail(ErrorKind::InvalidArgument, "size n must be >= 1, got " + std::to_string(n));
}

Integer factorial(long k) {
  Integer out = 1;
  for (long j = 2; j <= k; ++j) out *= j;
  return out;
}

std::string at(const char* family, long i, long n) {
  return std::string("pi_") + std::to_string(i) + " " + family + "(" + std::to_string(n) + ")";
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Sp: return "Sp";
    case Family::PSp: return "PSp";
    case Family::O: return "O";
    case Family::SO: return "SO";
    case Family::U: return "U";
    case Family::GL: return "GL";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "sp" || name == "Sp") return Family::Sp;
  if (name == "psp" || name == "PSp") return Family::PSp;
  if (name == "o" || name == "O") return Family::O;
  if (name == "so" || name == "SO") return Family::SO;
  if (name == "u" || name == "U") return Family::U;
  if (name == "gl" || name == "GL") return Family::GL;
  return std::nullopt;
}

TableAnswer TableAnswer::of(FgAbGroup g, std::string provenance) {
  return {Kind::Group, std::move(g), std::move(provenance), false};
}

TableAnswer TableAnswer::torsion_only(std::string provenance) {
  return {Kind::TorsionOnly, FgAbGroup{}, std::move(provenance), false};
}

TableAnswer TableAnswer::out_of_range(std::string provenance) {
  return {Kind::OutOfRange, FgAbGroup{}, std::move(provenance), false};
}

TableAnswer pi_sp(long i, long n) {
  check_args(i, n);
  const std::string where = at("Sp", i, n);
  if (i < 4 * n) {
    return TableAnswer::of(from_code(kSpStable[static_cast<std::size_t>(i % 8)]),
                           where + ": stable range i < 4n, Bott periodicity "
                                   "(0,0,0,Z,Z/2,Z/2,0,Z for i = 0..7 mod 8)");
  }
  if (i == 4 * n || i == 4 * n + 1) {
    return TableAnswer::of(n % 2 == 1 ? FgAbGroup::cyclic(2) : FgAbGroup::trivial(),
                           where + ": boundary degrees 4n, 4n+1 give Z/2 for odd n, 0 for even n");
  }
  if (i == 4 * n + 2) {
    Integer order = factorial(2 * n + 1);
    if (n % 2 == 1) order *= 2;
    return TableAnswer::of(FgAbGroup::cyclic(order),
                           where + ": first unstable group, Z/(2n+1)! for even n, "
                                   "Z/((2n+1)!*2) for odd n");
  }
  return TableAnswer::out_of_range(where + ": beyond the first unstable degree 4n+2");
}

TableAnswer pi_psp(long i, long n) {
  check_args(i, n);
  const std::string where = at("PSp", i, n);
  if (i == 0) return TableAnswer::of(FgAbGroup::trivial(), where + ": PSp(n) is connected");
  if (i == 1) {
    return TableAnswer::of(FgAbGroup::cyclic(2),
                           where + ": Sp(n) -> PSp(n) is a universal cover with fibre Z/2");
  }
  TableAnswer a = pi_sp(i, n);
  a.provenance = where + " = pi_i Sp(n) for i >= 2 (central quotient); " + a.provenance;
  return a;
}

TableAnswer pi_so(long i, long n) {
  check_args(i, n);
  const std::string where = at("SO", i, n);
  if (i == 0) return TableAnswer::of(FgAbGroup::trivial(), where + ": SO(n) is connected");
  if (i < n - 1) {
    return TableAnswer::of(from_code(kOStable[static_cast<std::size_t>(i % 8)]),
                           where + ": stable range 0 < i < n-1, Bott periodicity "
                                   "(Z/2,Z/2,0,Z,0,0,0,Z for i = 0..7 mod 8)");
  }
  if ((i == 7 && n == 3) || (i == 11 && n == 5) || (i == 15 && n == 7)) {
    return TableAnswer::torsion_only(where + ": unstable, finite (torsion) group; exact "
                                             "structure not tabulated");
  }
  return TableAnswer::out_of_range(where + ": outside the stable range i < n-1");
}

TableAnswer pi_o(long i, long n) {
  check_args(i, n);
  if (i == 0) {
    return TableAnswer::of(FgAbGroup::cyclic(2), at("O", i, n) + ": O(n) has two components");
  }
  TableAnswer a = pi_so(i, n);
  a.provenance = at("O", i, n) + " = pi_i SO(n) for i >= 1; " + a.provenance;
  return a;
}

TableAnswer pi_u_gl(long i, long n) {
  check_args(i, n);
  const std::string where = at("U", i, n);
  if (i >= 2 * n) return TableAnswer::out_of_range(where + ": outside the stable range i < 2n");
  if (i % 2 == 1) {
    return TableAnswer::of(FgAbGroup::integers(), where + ": stable range, Z in odd degrees");
  }
  return TableAnswer::of(FgAbGroup::trivial(), where + ": stable range, 0 in even degrees");
}

TableAnswer pi_group(Family f, long i, long n) {
  switch (f) {
    case Family::Sp: return pi_sp(i, n);
    case Family::PSp: return pi_psp(i, n);
    case Family::O: return pi_o(i, n);
    case Family::SO: return pi_so(i, n);
    case Family::U:
    case Family::GL: return pi_u_gl(i, n);
  }
  return TableAnswer::out_of_range("unknown family");
}

TableAnswer pi_classifying(Family f, long i, long n) {
  if (i < 1) {
    fail(ErrorKind::InvalidArgument,
         "classifying-space degree must be >= 1, got " + std::to_string(i));
  }
  check_args(i, n);
  if (f == Family::PSp && i == 4 * n + 4) {
    TableAnswer a = TableAnswer::of(
        FgAbGroup::cyclic(2),
        "pi_" + std::to_string(i) + " BPSp(" + std::to_string(n) +
            ") = Z/2: quoted value of pi_{4n+3} Sp(n), one degree past the tabulated range");
    a.asserted = true;
    return a;
  }
  TableAnswer a = pi_group(f, i - 1, n);
  a.provenance = "pi_" + std::to_string(i) + " B" + to_string(f) + "(" + std::to_string(n) +
                 ") = pi_" + std::to_string(i - 1) + " of the group; " + a.provenance;
  return a;
}

TableAnswer lookup(const GroupQuery& q) {
  return q.space == Space::Group ? pi_group(q.family, q.i, q.n)
                                 : pi_classifying(q.family, q.i, q.n);
}

}  // namespace sympdec::homotopy
