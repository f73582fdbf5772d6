#include "sympdec/induced_maps.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <numeric>
#include <sstream>

#include "sympdec/error.hpp"
#include "sympdec/smith.hpp"

namespace sympdec::induced {

using homotopy::pi_classifying;
using homotopy::pi_o;
using homotopy::pi_psp;
using homotopy::pi_so;
using homotopy::pi_sp;
using homotopy::Family;

namespace {

std::string label(const char* group, long i, long n) {
  return "pi_" + std::to_string(i) + " " + group + "(" + std::to_string(n) + ")";
}

void require_range(bool ok, const std::string& bound, long i) {
  if (!ok) {
    fail(ErrorKind::OutOfRange, "degree i=" + std::to_string(i) + " violates " + bound);
  }
}

FgAbGroup flatten(const std::vector<Component>& parts) {
  FgAbGroup out;
  for (const auto& p : parts) out = product(out, p.group);
  return out;
}

Integer mod_positive(const Integer& x, const Integer& k) {
  Integer r = x % k;
  if (r < 0) r += k;
  return r;
}

// Entries of row r reduced modulo the target order of that row.
void reduce_rows(IntMatrix& m, const FgAbGroup& target) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Integer& b = target.orders()[r];
    if (b.is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = mod_positive(m(r, c), b);
  }
}

// [M | diag(target orders)]: its column span is the image plus the relations.
IntMatrix with_target_relations(const AbHom& h) {
  const FgAbGroup t = h.target();
  IntMatrix rel(t.num_generators(), t.num_generators());
  for (std::size_t k = 0; k < t.num_generators(); ++k) rel(k, k) = t.orders()[k];
  return hconcat(h.matrix, rel);
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

long gcd_long(long a, long b) { return std::gcd(a, b); }

void check_bezout(long m, long n, long u, long v) {
  const long lhs = v * n - 4 * u * m * m;
  if (u <= 0 || v <= 0 || (lhs != 1 && lhs != -1)) {
    fail(ErrorKind::BadBezout, "need positive u, v with |vn - 4um^2| = 1; got u=" +
                                   std::to_string(u) + ", v=" + std::to_string(v) +
                                   ", vn - 4um^2 = " + std::to_string(lhs));
  }
}

// T~ coefficients (on x, on y) at group degree k.
std::pair<long, long> ttilde_coefficients(long k, long m, long u, long v, int z) {
  if (k == 0) return {0, 0};
  if (k == 1) return {z, 1};
  switch (k % 8) {
    case 0:
    case 1: return {0, v};
    case 3: return {2 * u * m, v};
    case 7: return {8 * u * m, v};
    default: return {0, 0};
  }
}

std::vector<std::vector<Integer>> row(std::initializer_list<long> values) {
  std::vector<Integer> r;
  for (long v : values) r.emplace_back(v);
  return {r};
}

}  // namespace

FgAbGroup AbHom::source() const { return flatten(source_parts); }

FgAbGroup AbHom::target() const { return flatten(target_parts); }

std::vector<int> z_values(ZValue z) {
  switch (z) {
    case ZValue::Zero: return {0};
    case ZValue::One: return {1};
    case ZValue::Unknown: return {0, 1};
  }
  return {};
}

Component component_from(const homotopy::TableAnswer& answer, std::string name) {
  using Kind = homotopy::TableAnswer::Kind;
  if (answer.kind == Kind::OutOfRange) {
    fail(ErrorKind::OutOfRange, name + " is not tabulated (" + answer.provenance + ")");
  }
  if (answer.kind == Kind::TorsionOnly) return {std::move(name), FgAbGroup{}, true};
  return {std::move(name), answer.group, false};
}

AbHom hom_from_coefficients(std::vector<Component> source, std::vector<Component> target,
                            const std::vector<std::vector<Integer>>& coeff,
                            std::string provenance, std::string valid_range) {
  if (coeff.size() != target.size()) {
    throw std::logic_error("coefficient table has wrong number of rows");
  }
  for (const auto& c : source) {
    if (c.group.num_generators() > 1) throw std::logic_error("non-cyclic source component");
  }
  for (const auto& c : target) {
    if (c.group.num_generators() > 1) throw std::logic_error("non-cyclic target component");
  }
  AbHom h{std::move(source), std::move(target), IntMatrix(), std::move(provenance),
          std::move(valid_range)};
  h.matrix = IntMatrix(h.target().num_generators(), h.source().num_generators());
  std::size_t r = 0;
  for (std::size_t t = 0; t < h.target_parts.size(); ++t) {
    if (coeff[t].size() != h.source_parts.size()) {
      throw std::logic_error("coefficient table has wrong number of columns");
    }
    if (h.target_parts[t].group.is_trivial()) continue;
    const Integer& b = h.target_parts[t].group.orders()[0];
    std::size_t c = 0;
    for (std::size_t s = 0; s < h.source_parts.size(); ++s) {
      if (h.source_parts[s].group.is_trivial()) continue;
      const Integer& a = h.source_parts[s].group.orders()[0];
      if (b.is_zero()) {
        h.matrix(r, c) = a.is_zero() ? coeff[t][s] : Integer(0);
      } else {
        h.matrix(r, c) = mod_positive(coeff[t][s], b);
      }
      ++c;
    }
    ++r;
  }
  check_well_defined(h);
  return h;
}

bool is_well_defined(const AbHom& h) {
  try {
    check_well_defined(h);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void check_well_defined(const AbHom& h) {
  const FgAbGroup src = h.source();
  const FgAbGroup tgt = h.target();
  if (h.matrix.rows() != tgt.num_generators() || h.matrix.cols() != src.num_generators()) {
    fail(ErrorKind::MalformedHom, "matrix is " + std::to_string(h.matrix.rows()) + "x" +
                                      std::to_string(h.matrix.cols()) + " but the groups need " +
                                      std::to_string(tgt.num_generators()) + "x" +
                                      std::to_string(src.num_generators()));
  }
  for (std::size_t c = 0; c < src.num_generators(); ++c) {
    const Integer& a = src.orders()[c];
    if (a.is_zero()) continue;
    for (std::size_t r = 0; r < tgt.num_generators(); ++r) {
      const Integer& b = tgt.orders()[r];
      const Integer image = a * h.matrix(r, c);
      const bool vanishes = b.is_zero() ? image.is_zero() : Integer(image % b).is_zero();
      if (!vanishes) {
        std::ostringstream os;
        os << "generator " << c << " of order " << a << " maps to " << h.matrix(r, c)
           << " in a factor of order " << (b.is_zero() ? std::string("inf") : b.str());
        fail(ErrorKind::MalformedHom, os.str());
      }
    }
  }
}

AbHom compose(const AbHom& g, const AbHom& f) {
  if (!(f.target() == g.source())) {
    fail(ErrorKind::MalformedHom,
         "compose: " + f.target().to_string() + " does not match " + g.source().to_string());
  }
  AbHom out{f.source_parts, g.target_parts, g.matrix * f.matrix,
            g.provenance + " after " + f.provenance, f.valid_range};
  reduce_rows(out.matrix, out.target());
  return out;
}

AbHom sum_on_product(const AbHom& f, const AbHom& g) {
  if (!(f.target() == g.target())) {
    fail(ErrorKind::MalformedHom, "sum_on_product: targets differ");
  }
  std::vector<Component> parts = f.source_parts;
  parts.insert(parts.end(), g.source_parts.begin(), g.source_parts.end());
  AbHom out{std::move(parts), f.target_parts, hconcat(f.matrix, g.matrix),
            f.provenance + " plus " + g.provenance, f.valid_range};
  reduce_rows(out.matrix, out.target());
  return out;
}

AbHom diagonal(const Component& c) {
  return hom_from_coefficients({c}, {c, c}, {{Integer(1)}, {Integer(1)}}, "diagonal x |-> (x, x)",
                               "all degrees");
}

bool is_surjective(const AbHom& h) {
  check_well_defined(h);
  const std::size_t rows = h.matrix.rows();
  if (rows == 0) return true;
  const SmithForm s = smith_normal_form(with_target_relations(h));
  if (s.rank() < rows) return false;
  for (std::size_t k = 0; k < rows; ++k) {
    if (s.D(k, k) != 1) return false;
  }
  return true;
}

bool is_injective(const AbHom& h) {
  check_well_defined(h);
  for (const auto& p : h.source_parts) {
    if (p.torsion_unknown) {
      fail(ErrorKind::MalformedHom, "kernel undetermined: " + p.label + " is an untabulated torsion group");
    }
  }
  const std::size_t k = h.matrix.cols();
  if (k == 0) return true;
  // x is in the kernel iff M x = diag(b) y for some y; project the integer
  // kernel of [M | -diag(b)] to the x coordinates.
  IntMatrix system = with_target_relations(h);
  for (std::size_t c = k; c < system.cols(); ++c) system.negate_col(c);
  const IntMatrix basis = kernel_basis(system);
  const FgAbGroup src = h.source();
  for (std::size_t col = 0; col < basis.cols(); ++col) {
    for (std::size_t j = 0; j < k; ++j) {
      const Integer& a = src.orders()[j];
      const Integer& x = basis(j, col);
      const bool trivial = a.is_zero() ? x.is_zero() : Integer(x % a).is_zero();
      if (!trivial) return false;
    }
  }
  return true;
}

bool is_isomorphism(const AbHom& h) { return is_surjective(h) && is_injective(h); }

std::string ImageDescriptor::to_string() const {
  if (cyclic_index) {
    const Integer& d = *cyclic_index;
    if (d.is_zero()) return "0";
    if (d == 1) return "Z";
    return d.str() + "Z";
  }
  return surjective ? "everything" : "coker = " + cokernel.to_string();
}

ImageDescriptor image_description(const AbHom& h) {
  check_well_defined(h);
  const FgAbGroup tgt = h.target();
  for (const auto& p : h.source_parts) {
    if (p.torsion_unknown && tgt.rank() != tgt.num_generators()) {
      fail(ErrorKind::MalformedHom,
           "image undetermined: " + p.label + " is untabulated torsion and the target has torsion");
    }
  }
  ImageDescriptor out;
  const SmithForm s = smith_normal_form(with_target_relations(h));
  std::vector<Integer> coker;
  const std::size_t rows = h.matrix.rows();
  for (std::size_t k = 0; k < rows; ++k) {
    coker.push_back(k < s.rank() ? s.D(k, k) : Integer(0));
  }
  out.cokernel = FgAbGroup(coker);
  out.surjective = out.cokernel.is_trivial();
  if (rows == 1) {
    Integer d = tgt.orders()[0];
    for (std::size_t c = 0; c < h.matrix.cols(); ++c) d = gcd(d, h.matrix(0, c));
    // For Z/k with gcd k, the image is trivial.
    if (!tgt.orders()[0].is_zero() && d == tgt.orders()[0]) d = 0;
    out.cyclic_index = d;
  }
  return out;
}

AbHom hom_direct_sum(long i, long m, long n) {
  const long bound = 4 * std::min(m, n) + 2;
  require_range(i < bound, "i < 4*min(m,n)+2 = " + std::to_string(bound), i);
  return hom_from_coefficients(
      {component_from(pi_sp(i, m), label("Sp", i, m)), component_from(pi_sp(i, n), label("Sp", i, n))},
      {component_from(pi_sp(i, m + n), label("Sp", i, m + n))}, row({1, 1}),
      "direct sum: (x, y) |-> x + y", "i < 4*min(m,n)+2");
}

AbHom hom_r_fold(long i, long n, long r) {
  if (r < 1) fail(ErrorKind::InvalidArgument, "r must be positive");
  require_range(i < 4 * n + 2, "i < 4n+2 = " + std::to_string(4 * n + 2), i);
  return hom_from_coefficients({component_from(pi_sp(i, n), label("Sp", i, n))},
                               {component_from(pi_sp(i, r * n), label("Sp", i, r * n))},
                               row({r}), "r-fold direct sum: x |-> r x", "i < 4n+2");
}

AbHom hom_doubling(long i, long n) {
  require_range(i < n - 1, "i < n-1 = " + std::to_string(n - 1), i);
  const bool free_degree = i % 8 == 3 || i % 8 == 7;
  return hom_from_coefficients({component_from(pi_o(i, n), label("O", i, n))},
                               {component_from(pi_sp(i, n), label("Sp", i, n))},
                               row({free_degree ? 2 : 0}),
                               free_degree ? "doubling: isomorphism onto 2 pi_i Sp(n)"
                                           : "doubling: source or target trivial",
                               "i < n-1");
}

AbHom hom_tensor_sp_o(long i, long m, long n) {
  require_range(i < 4 * m + 2, "i < 4m+2 = " + std::to_string(4 * m + 2), i);
  require_range(i < n - 1, "i < n-1 = " + std::to_string(n - 1), i);
  return hom_from_coefficients(
      {component_from(pi_sp(i, m), label("Sp", i, m)), component_from(pi_o(i, n), label("O", i, n))},
      {component_from(pi_sp(i, m * n), label("Sp", i, m * n))}, row({n, 2 * m}),
      "tensor Sp x O -> Sp: (x, y) |-> n x + 2m y", "i < 4m+2 and i < n-1");
}

AbHom hom_tensor_quotient(long i, long m, long n) {
  if (n % 2 == 0) fail(ErrorKind::EvenN, "the quotient tensor product needs odd n, got " + std::to_string(n));
  require_range(i < 4 * m + 2, "i < 4m+2 = " + std::to_string(4 * m + 2), i);
  const bool low = i <= 1;
  return hom_from_coefficients(
      {component_from(pi_psp(i, m), label("PSp", i, m)),
       component_from(pi_so(i, n), label("SO", i, n))},
      {component_from(pi_psp(i, m * n), label("PSp", i, m * n))},
      low ? row({0, 0}) : row({n, 2 * m}),
      low ? "tensor PSp x SO -> PSp: trivial for i = 0, 1"
          : "tensor PSp x SO -> PSp: (x, y) |-> n x + 2m y",
      "i < 4m+2, n odd");
}

AbHom hom_tensor_sp_sp(long i, long m, long n) {
  if (m > n) fail(ErrorKind::OutOfRange, "tensor Sp x Sp formula requires m <= n");
  require_range(i < 4 * m + 2, "i < 4m+2 = " + std::to_string(4 * m + 2), i);
  long cx = 0;
  long cy = 0;
  std::string what = "tensor Sp x Sp -> O: zero (source torsion or target trivial)";
  if (i % 8 == 3) {
    cx = n;
    cy = m;
    what = "tensor Sp x Sp -> O: (x, y) |-> n x + m y";
  } else if (i % 8 == 7) {
    cx = 4 * n;
    cy = 4 * m;
    what = "tensor Sp x Sp -> O: (x, y) |-> 4(n x + m y)";
  }
  return hom_from_coefficients(
      {component_from(pi_sp(i, m), label("Sp", i, m)), component_from(pi_sp(i, n), label("Sp", i, n))},
      {component_from(pi_o(i, 4 * m * n), label("O", i, 4 * m * n))}, row({cx, cy}), what,
      "m <= n, i < 4m+2");
}

AbHom hom_square_tensor(long i, long m) {
  require_range(i < 4 * m + 2, "i < 4m+2 = " + std::to_string(4 * m + 2), i);
  long c = 0;
  std::string what = "A |-> A (x~) A: zero";
  if (i % 8 == 3) {
    c = 2 * m;
    what = "A |-> A (x~) A: x |-> 2m x";
  } else if (i % 8 == 7) {
    c = 8 * m;
    what = "A |-> A (x~) A: x |-> 8m x";
  }
  return hom_from_coefficients({component_from(pi_sp(i, m), label("Sp", i, m))},
                               {component_from(pi_o(i, 4 * m * m), label("O", i, 4 * m * m))},
                               row({c}), what, "i < 4m+2");
}

AbHom hom_Ttilde(long i, long m, long n, long u, long v, int z) {
  check_bezout(m, n, u, v);
  if (z != 0 && z != 1) fail(ErrorKind::InvalidArgument, "z must be 0 or 1");
  const long bound = std::min(4 * m + 2, n - 1);
  require_range(i < bound, "i < min(4m+2, n-1) = " + std::to_string(bound), i);
  const long big_n = 4 * u * m * m + v * n;
  const auto [cx, cy] = ttilde_coefficients(i, m, u, v, z);
  std::ostringstream what;
  what << "T~ into SO(" << big_n << "): (x, y) |-> " << cx << " x + " << cy << " y";
  return hom_from_coefficients(
      {component_from(pi_psp(i, m), label("PSp", i, m)),
       component_from(pi_so(i, n), label("SO", i, n))},
      {component_from(pi_so(i, big_n), label("SO", i, big_n))}, row({cx, cy}), what.str(),
      "i < min(4m+2, n-1), |vn - 4um^2| = 1");
}

std::vector<AbHom> hom_Ttilde_candidates(long i, long m, long n, long u, long v, ZValue z) {
  std::vector<AbHom> out;
  const std::vector<int> zs = i == 1 ? z_values(z) : std::vector<int>{0};
  for (int zv : zs) out.push_back(hom_Ttilde(i, m, n, u, v, zv));
  return out;
}

AbHom hom_J(long i, long m, long n, long u, long v, int z) {
  if (n % 2 == 0) fail(ErrorKind::EvenN, "J needs odd n, got " + std::to_string(n));
  if (gcd_long(m, n) != 1) {
    fail(ErrorKind::NotCoprime, "J needs gcd(m, n) = 1, got m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n));
  }
  check_bezout(m, n, u, v);
  if (z != 0 && z != 1) fail(ErrorKind::InvalidArgument, "z must be 0 or 1");
  const long bound = std::min(4 * m + 3, n);
  require_range(i > 0 && i < bound, "0 < i < min(4m+3, n) = " + std::to_string(bound), i);
  const long k = i - 1;
  const long big_n = 4 * u * m * m + v * n;
  const auto blabel = [i](const char* g, long size) {
    return "pi_" + std::to_string(i) + " B" + g + "(" + std::to_string(size) + ")";
  };
  // Top row is (x)_* at group degree k. At k = 1 this is x |-> n x = x, the
  // value the invertibility of J_2 rests on (not the trivial map).
  const auto [tx, ty] = ttilde_coefficients(k, m, u, v, z);
  std::vector<std::vector<Integer>> coeff = {{Integer(k == 0 ? 0 : n), Integer(k == 0 ? 0 : 2 * m)},
                                             {Integer(tx), Integer(ty)}};
  std::ostringstream what;
  what << "J_" << i << " = ((x)_*, T~_" << k << ") with u=" << u << ", v=" << v << ", z=" << z
       << ", N=" << big_n;
  return hom_from_coefficients(
      {component_from(pi_classifying(Family::PSp, i, m), blabel("PSp", m)),
       component_from(pi_classifying(Family::SO, i, n), blabel("SO", n))},
      {component_from(pi_classifying(Family::PSp, i, m * n), blabel("PSp", m * n)),
       component_from(pi_classifying(Family::SO, i, big_n), blabel("SO", big_n))},
      coeff, what.str(), "0 < i < min(4m+3, n), n odd, gcd(m, n) = 1");
}

std::vector<AbHom> hom_J_candidates(long i, long m, long n, long u, long v, ZValue z) {
  std::vector<AbHom> out;
  const std::vector<int> zs = i == 2 ? z_values(z) : std::vector<int>{0};
  for (int zv : zs) out.push_back(hom_J(i, m, n, u, v, zv));
  return out;
}

}  // namespace sympdec::induced
