#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympdec/induced_maps.hpp"

namespace sympdec::lifting {

/// Positive u, v with v n - 4 u m^2 = sign, sign = +-1, and N = 4 u m^2 + v n.
struct BezoutWitness {
  long m = 0;
  long n = 0;
  long u = 0;
  long v = 0;
  int sign = 0;
  long N = 0;
};

/// Minimal u > 0, then minimal v > 0. EvenN for even n, NotCoprime if gcd(m, n) > 1.
BezoutWitness bezout_uv(long m, long n);

/// Largest c with J_i an isomorphism for 0 < i < c and J_c surjective.
/// Requires gcd(m, n) = 1, n odd, m > 1, n > 7 (HypothesisFailure otherwise,
/// and also when some J_i with i != 0 mod 8 fails to be an isomorphism or the
/// answer depends on z).
long connectivity_J(long m, long n);

enum class NoSectionCase { SphereTop, SphereC };

/// Obstruction to a section of the tensor map at one classifying degree.
struct NoSectionWitness {
  long degree = 0;
  induced::AbHom hom;
  induced::ImageDescriptor image;
  NoSectionCase which = NoSectionCase::SphereTop;
};

/// Case SphereTop: 4m+4 < n and 4m+4 < 4mn, image m Z at degree 4m+4.
/// Case SphereC: (i, n) in {(8,3), (12,5), (16,7)}, n < 4m+3, n < 4mn and
/// pi_{i-1} Sp(m) tabulated; image n Z at degree i.
/// Only proper images count; EvenN for even n.
std::optional<NoSectionWitness> no_section_witness(long m, long n);

struct PostnikovEntry {
  long i = 0;
  long degree = 0;
  bool pass = false;
};

struct PostnikovReport {
  long m = 0;
  long n = 0;
  std::vector<PostnikovEntry> entries;
  /// The k1 stage K(Z/2, 3); listed but not subject to the mod 4 test.
  long k1_degree = 3;
  bool pass = true;
};

/// Degrees i+2, i+6, i+7, i+8 for i = 3 mod 8, 1 < i < n-1; each must be
/// nonzero mod 4. EvenN for even n.
PostnikovReport postnikov_degree_check(long m, long n);

enum class Verdict { Decomposable, NoSection, NotCovered };
std::string to_string(Verdict v);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

struct DecisionReport {
  Verdict verdict = Verdict::NotCovered;
  std::string theorem;
  std::vector<Hypothesis> hypotheses;
  std::optional<std::string> failing_hypothesis;
  std::optional<BezoutWitness> witness;
  std::optional<long> connectivity;
  std::optional<NoSectionWitness> obstruction;
  std::optional<std::pair<std::string, std::string>> factors;
  std::optional<PostnikovReport> postnikov;
  std::vector<std::string> notes;
};

DecisionReport decide_azumaya(long m, long n, long dim_x);
DecisionReport decide_bundle(long m, long n, long dim_x);

/// kind SphereTop: the sphere S^{4m+4}; SphereC: S^i for the matching (i, n).
/// CaseMismatch unless the matching no-section case applies.
DecisionReport example_obstruction(NoSectionCase kind, long m, long n);

}  // namespace sympdec::lifting
