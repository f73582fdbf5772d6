#include "sympdec/lifting.hpp"

#include <boost/integer/extended_euclidean.hpp>
#include <numeric>

#include "sympdec/error.hpp"

namespace sympdec::lifting {

using homotopy::Family;
using homotopy::pi_classifying;
using induced::component_from;

namespace {

constexpr long kMaxParam = 1L << 20;

void check_positive(long m, long n) {
  if (m < 1 || n < 1) {
    fail(ErrorKind::InvalidArgument,
         "m and n must be positive, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  }
}

void check_odd(long n) {
  if (n % 2 == 0) fail(ErrorKind::EvenN, "n must be odd, got " + std::to_string(n));
}

std::string bclass(const char* g, long i, long size) {
  return "pi_" + std::to_string(i) + " B" + g + "(" + std::to_string(size) + ")";
}

}  // namespace

BezoutWitness bezout_uv(long m, long n) {
  check_positive(m, n);
  if (m > kMaxParam || n > kMaxParam) {
    fail(ErrorKind::InvalidArgument, "m and n must be at most " + std::to_string(kMaxParam));
  }
  check_odd(n);
  if (std::gcd(m, n) != 1) {
    fail(ErrorKind::NotCoprime,
         "gcd(" + std::to_string(m) + ", " + std::to_string(n) + ") = " + std::to_string(std::gcd(m, n)));
  }
  const long four_m2 = 4 * m * m;
  BezoutWitness w{m, n, 0, 0, 0, 0};
  if (n == 1) {
    // v - 4um^2 = +-1: u = 1, smallest v is 4m^2 - 1.
    w.u = 1;
    w.v = four_m2 - 1;
    w.sign = -1;
  } else {
    // 4m^2 u = 1 (mod n) gives sign -1; its complement n - u gives sign +1.
    const auto eg = boost::integer::extended_euclidean(four_m2 % n, n);
    long inv = eg.x % n;
    if (inv < 0) inv += n;
    const long u_minus = inv;
    const long u_plus = n - inv;
    if (u_minus < u_plus) {
      w.u = u_minus;
      w.sign = -1;
    } else {
      w.u = u_plus;
      w.sign = 1;
    }
    w.v = (four_m2 * w.u + w.sign) / n;
  }
  w.N = four_m2 * w.u + w.v * n;
  if (w.v * n - four_m2 * w.u != w.sign) throw std::logic_error("bezout_uv: witness check failed");
  return w;
}

long connectivity_J(long m, long n) {
  check_positive(m, n);
  if (n % 2 == 0) fail(ErrorKind::HypothesisFailure, "n odd required, got n=" + std::to_string(n));
  if (std::gcd(m, n) != 1) {
    fail(ErrorKind::HypothesisFailure, "gcd(m, n) = 1 required");
  }
  if (m <= 1) fail(ErrorKind::HypothesisFailure, "m > 1 required, got m=" + std::to_string(m));
  if (n <= 7) fail(ErrorKind::HypothesisFailure, "n > 7 required, got n=" + std::to_string(n));
  const BezoutWitness w = bezout_uv(m, n);
  const long d = std::min(4 * m + 3, n);
  std::optional<long> result;
  for (const int z : {0, 1}) {
    long c = d - 1;
    for (long i = 1; i < d; ++i) {
      const induced::AbHom h = induced::hom_J(i, m, n, w.u, w.v, z);
      if (induced::is_isomorphism(h)) continue;
      if (i % 8 != 0) {
        fail(ErrorKind::HypothesisFailure,
             "J_" + std::to_string(i) + " is not an isomorphism (z=" + std::to_string(z) + ")");
      }
      c = induced::is_surjective(h) ? i : i - 1;
      break;
    }
    if (result && *result != c) {
      fail(ErrorKind::HypothesisFailure, "connectivity of J is z-sensitive");
    }
    result = c;
  }
  return *result;
}

std::optional<NoSectionWitness> no_section_witness(long m, long n) {
  check_positive(m, n);
  check_odd(n);
  const long top = 4 * m + 4;
  if (top < n && top < 4 * m * n) {
    // pi_top BPSp(m) = Z/2 maps to zero in Z; only m times the BSO(n) part survives.
    auto hom = induced::hom_from_coefficients(
        {component_from(pi_classifying(Family::PSp, top, m), bclass("PSp", top, m)),
         component_from(pi_classifying(Family::SO, top, n), bclass("SO", top, n))},
        {component_from(pi_classifying(Family::PSp, top, m * n), bclass("PSp", top, m * n))},
        {{Integer(n), Integer(m)}}, "tensor map on pi_" + std::to_string(top) + ": (x, y) |-> n x + m y",
        "4m+4 < n, 4m+4 < 4mn");
    auto image = induced::image_description(hom);
    if (image.surjective) return std::nullopt;
    return NoSectionWitness{top, std::move(hom), std::move(image), NoSectionCase::SphereTop};
  }
  const std::pair<long, long> cases[] = {{8, 3}, {12, 5}, {16, 7}};
  for (const auto& [i, cn] : cases) {
    if (cn != n) continue;
    if (!(n < 4 * m + 3 && n < 4 * m * n)) return std::nullopt;
    const auto src = pi_classifying(Family::PSp, i, m);
    const auto tgt = pi_classifying(Family::PSp, i, m * n);
    if (!src.is_group() || !tgt.is_group()) return std::nullopt;
    auto hom = induced::hom_from_coefficients(
        {component_from(src, bclass("PSp", i, m)),
         component_from(pi_classifying(Family::SO, i, n), bclass("SO", i, n))},
        {component_from(tgt, bclass("PSp", i, m * n))}, {{Integer(n), Integer(0)}},
        "tensor map on pi_" + std::to_string(i) + ": (x, y) |-> n x, y torsion",
        "n in {3,5,7}, n < 4m+3, n < 4mn");
    auto image = induced::image_description(hom);
    if (image.surjective) return std::nullopt;
    return NoSectionWitness{i, std::move(hom), std::move(image), NoSectionCase::SphereC};
  }
  return std::nullopt;
}

PostnikovReport postnikov_degree_check(long m, long n) {
  check_positive(m, n);
  check_odd(n);
  PostnikovReport r;
  r.m = m;
  r.n = n;
  for (long i = 3; i < n - 1; i += 8) {
    for (const long off : {2, 6, 7, 8}) {
      const long deg = i + off;
      const bool ok = deg % 4 != 0;
      r.entries.push_back({i, deg, ok});
      r.pass = r.pass && ok;
    }
  }
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Decomposable: return "Decomposable";
    case Verdict::NoSection: return "NoSection";
    case Verdict::NotCovered: return "NotCovered";
  }
  return "?";
}

namespace {

void record(DecisionReport& r, std::string name, bool holds) {
  if (!holds && !r.failing_hypothesis) r.failing_hypothesis = name;
  r.hypotheses.push_back({std::move(name), holds});
}

}  // namespace

DecisionReport decide_azumaya(long m, long n, long dim_x) {
  check_positive(m, n);
  if (dim_x < 0) fail(ErrorKind::InvalidArgument, "dim must be non-negative");
  DecisionReport r;
  r.theorem =
      "Azumaya algebras of degree 2mn with symplectic involution over a CW complex of dimension "
      "<= 7 decompose when m > 1, n > 7 and n is odd, gcd(m, n) = 1";
  record(r, "m > 1", m > 1);
  record(r, "n > 7", n > 7);
  record(r, "n odd", n % 2 == 1);
  record(r, "gcd(m, n) = 1", std::gcd(m, n) == 1);
  record(r, "dim(X) <= 7", dim_x <= 7);
  if (!r.failing_hypothesis) {
    r.witness = bezout_uv(m, n);
    r.connectivity = connectivity_J(m, n);
    if (*r.connectivity < dim_x) {
      throw std::logic_error("decide_azumaya: J less connected than dim(X)");
    }
    r.verdict = Verdict::Decomposable;
    r.factors = {"degree " + std::to_string(2 * m) + " Azumaya algebra with symplectic involution",
                 "degree " + std::to_string(n) +
                     " Azumaya algebra with orthogonal involution, Brauer-trivial"};
    r.notes.push_back("lift through J = (tensor, T~) into BPSp(mn) x BSO(" +
                      std::to_string(r.witness->N) + ")");
    return r;
  }
  r.verdict = Verdict::NotCovered;
  if (n % 2 == 1) {
    r.obstruction = no_section_witness(m, n);
    if (r.obstruction) {
      r.notes.push_back("the tensor map has no section: image " + r.obstruction->image.to_string() +
                        " at degree " + std::to_string(r.obstruction->degree));
    }
  }
  return r;
}

DecisionReport decide_bundle(long m, long n, long dim_x) {
  check_positive(m, n);
  if (dim_x < 0) fail(ErrorKind::InvalidArgument, "dim must be non-negative");
  DecisionReport r;
  r.theorem =
      "a rank 2mn symplectic bundle over a CW complex of dimension <= n splits as a rank 2m "
      "symplectic bundle tensor a rank n orthogonal bundle when n is odd";
  record(r, "n odd", n % 2 == 1);
  record(r, "dim(X) <= n", dim_x <= n);
  if (n % 2 == 1) r.postnikov = postnikov_degree_check(m, n);
  if (r.failing_hypothesis) {
    r.verdict = Verdict::NotCovered;
    return r;
  }
  if (!r.postnikov->pass) throw std::logic_error("decide_bundle: Postnikov degree check failed");
  r.verdict = Verdict::Decomposable;
  r.factors = {"rank " + std::to_string(2 * m) + " symplectic bundle",
               "rank " + std::to_string(n) + " orthogonal bundle"};
  r.notes.push_back("k1 stage K(Z/2, 3) handled through the n-skeleton of BSp(mn)");
  return r;
}

DecisionReport example_obstruction(NoSectionCase kind, long m, long n) {
  check_positive(m, n);
  if (n % 2 == 0) fail(ErrorKind::CaseMismatch, "n must be odd");
  auto w = no_section_witness(m, n);
  if (!w || w->which != kind) {
    fail(ErrorKind::CaseMismatch,
         kind == NoSectionCase::SphereTop
             ? "needs 4m+4 < n and 4m+4 < 4mn with m > 1"
             : "needs n in {3,5,7}, n < 4m+3, n < 4mn and pi_{i-1} Sp(m) tabulated");
  }
  DecisionReport r;
  r.verdict = Verdict::NoSection;
  r.theorem = "the tensor map BPSp(m) x BSO(n) -> BPSp(mn) has no section";
  r.hypotheses.push_back({kind == NoSectionCase::SphereTop ? "4m+4 < n and 4m+4 < 4mn"
                                                           : "n in {3,5,7}, n < 4m+3, n < 4mn",
                          true});
  const std::string sphere = "S^" + std::to_string(w->degree);
  r.notes.push_back("sphere " + sphere);
  r.notes.push_back("generator S of pi_" + std::to_string(w->degree) + " BPSp(" +
                    std::to_string(m * n) + ") = Z, an Azumaya algebra of degree " +
                    std::to_string(2 * m * n) + " with symplectic involution on " + sphere);
  r.notes.push_back("image of the tensor map is " + w->image.to_string() +
                    ", a proper subgroup, so S has no tensor decomposition");
  r.obstruction = std::move(w);
  return r;
}

}  // namespace sympdec::lifting
