#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympdec/ab_group.hpp"
#include "sympdec/homotopy_tables.hpp"
#include "sympdec/int_matrix.hpp"

namespace sympdec::induced {

/// One factor of a product source or target, e.g. "pi_3 Sp(2)".
struct Component {
  std::string label;
  FgAbGroup group;
  /// Finite group whose structure is not tabulated. It contributes no
  /// generator columns; only questions that are independent of it
  /// (images in torsion-free targets) can be answered.
  bool torsion_unknown = false;
};

/// Homomorphism between products of cyclic groups. Columns of `matrix` are
/// indexed by the flattened source generators, rows by target generators.
struct AbHom {
  std::vector<Component> source_parts;
  std::vector<Component> target_parts;
  IntMatrix matrix;
  std::string provenance;
  std::string valid_range;

  FgAbGroup source() const;
  FgAbGroup target() const;
};

enum class ZValue { Zero, One, Unknown };

/// The unknown Z/2 parameter enumerated into its concrete values.
std::vector<int> z_values(ZValue z);

/// Parameters shared by the formula operations.
struct FormulaContext {
  long m = 1;
  long n = 1;
  long i = 0;
  std::optional<long> u;
  std::optional<long> v;
  ZValue z = ZValue::Unknown;
};

Component component_from(const homotopy::TableAnswer& answer, std::string label);

/// Builds a hom from integer coefficients coeff[t][s] between cyclic (or
/// trivial) components. Coefficients are reduced modulo each finite target
/// order, and torsion-to-Z entries are zero since Hom(Z/a, Z) = 0.
AbHom hom_from_coefficients(std::vector<Component> source, std::vector<Component> target,
                            const std::vector<std::vector<Integer>>& coeff,
                            std::string provenance, std::string valid_range);

bool is_well_defined(const AbHom& h);
/// Throws MalformedHom naming the first offending entry.
void check_well_defined(const AbHom& h);

/// g . f; f's target must equal g's source.
AbHom compose(const AbHom& g, const AbHom& f);
/// (x, y) |-> f(x) + g(y) on the product of the two sources.
AbHom sum_on_product(const AbHom& f, const AbHom& g);
/// x |-> (x, x) into the product of a component with itself.
AbHom diagonal(const Component& c);

bool is_surjective(const AbHom& h);
bool is_injective(const AbHom& h);
bool is_isomorphism(const AbHom& h);

struct ImageDescriptor {
  /// Target modulo image.
  FgAbGroup cokernel;
  /// For a cyclic target Z (or Z/k): the image is dZ (or dZ/kZ). d = 0 means
  /// the image is trivial.
  std::optional<Integer> cyclic_index;
  bool surjective = false;

  /// "2Z", "Z", "0", or "coker = Z/3" for non-cyclic targets.
  std::string to_string() const;
};
ImageDescriptor image_description(const AbHom& h);

// Induced maps on pi_i. Each refuses degrees outside its validity window
// with OutOfRange naming the violated bound.

/// (+)_*: pi_i Sp(m) x pi_i Sp(n) -> pi_i Sp(m+n), (x, y) |-> x + y; i < 4 min(m,n) + 2.
AbHom hom_direct_sum(long i, long m, long n);
/// (+)^r_*: pi_i Sp(n) -> pi_i Sp(rn), x |-> r x; i < 4n + 2.
AbHom hom_r_fold(long i, long n, long r);
/// d_*: pi_i O(n) -> pi_i Sp(n); x2 for i = 3, 7 mod 8, zero otherwise; i < n - 1.
AbHom hom_doubling(long i, long n);
/// (x)_*: pi_i Sp(m) x pi_i O(n) -> pi_i Sp(mn), (x, y) |-> n x + 2m y.
AbHom hom_tensor_sp_o(long i, long m, long n);
/// (x)_*: pi_i PSp(m) x pi_i SO(n) -> pi_i PSp(mn), n odd. Same formula for
/// i >= 2; the zero map for i = 0, 1.
AbHom hom_tensor_quotient(long i, long m, long n);
/// Sp(m) x Sp(n) -> O(4mn): n x + m y (i = 3 mod 8), 4(n x + m y) (i = 7), else 0.
AbHom hom_tensor_sp_sp(long i, long m, long n);
/// A |-> A (x~) A: 2m x (i = 3 mod 8), 8m x (i = 7), else 0.
AbHom hom_square_tensor(long i, long m);
/// T~_i: pi_i PSp(m) x pi_i SO(n) -> pi_i SO(N), N = 4um^2 + vn.
AbHom hom_Ttilde(long i, long m, long n, long u, long v, int z);
/// One hom per admissible z (two when z is Unknown and i = 1).
std::vector<AbHom> hom_Ttilde_candidates(long i, long m, long n, long u, long v, ZValue z);
/// J_i at classifying degree i: rows are (x)_* and T~ at group degree i - 1.
AbHom hom_J(long i, long m, long n, long u, long v, int z);
std::vector<AbHom> hom_J_candidates(long i, long m, long n, long u, long v, ZValue z);

}  // namespace sympdec::induced
