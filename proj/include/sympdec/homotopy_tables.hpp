#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sympdec/ab_group.hpp"

namespace sympdec::homotopy {

enum class Family { Sp, PSp, O, SO, U, GL };
enum class Space { Group, Classifying };

std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct GroupQuery {
  Family family = Family::Sp;
  long n = 1;
  long i = 0;
  Space space = Space::Group;
};

/// Result of a table lookup. Out-of-range queries get a marker, never a
/// guessed group.
struct TableAnswer {
  enum class Kind { Group, TorsionOnly, OutOfRange };

  Kind kind = Kind::OutOfRange;
  FgAbGroup group;
  std::string provenance;
  /// Value quoted from the literature outside the rule-based tables.
  bool asserted = false;

  bool is_group() const { return kind == Kind::Group; }

  static TableAnswer of(FgAbGroup g, std::string provenance);
  static TableAnswer torsion_only(std::string provenance);
  static TableAnswer out_of_range(std::string provenance);
};

/// Homotopy groups of the complex groups (equivalently of their maximal
/// compact subgroups). Degrees i >= 0, sizes n >= 1; InvalidArgument otherwise.
TableAnswer pi_sp(long i, long n);
TableAnswer pi_psp(long i, long n);
TableAnswer pi_so(long i, long n);
TableAnswer pi_o(long i, long n);
TableAnswer pi_u_gl(long i, long n);
TableAnswer pi_group(Family f, long i, long n);
/// pi_i BG = pi_{i-1} G for i >= 1. The single exception is
/// pi_{4n+4} BPSp(n) = Z/2, which is quoted rather than derived.
TableAnswer pi_classifying(Family f, long i, long n);
TableAnswer lookup(const GroupQuery& q);

}  // namespace sympdec::homotopy
