#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "sympdec/exact_matrix.hpp"
#include "sympdec/random.hpp"

namespace sympdec::groups {

enum class GroupKind { Sp, O, SO, GL };

std::string to_string(GroupKind kind);

/// A matrix together with the group it claims to belong to. For Sp the size
/// parameter is m and the matrix is 2m x 2m; otherwise it is the matrix size.
struct GroupElement {
  ExactMatrix matrix;
  GroupKind group = GroupKind::GL;
  std::size_t size = 0;
};

bool belongs(const GroupElement& g);

/// J_{2m} = [[0, I_m], [-I_m, 0]].
ExactMatrix standard_symplectic_form(std::size_t m);

struct Blocks {
  ExactMatrix a11, a12, a21, a22;
};
/// Splits a 2m x 2m matrix into its four m x m blocks.
Blocks split_blocks(const ExactMatrix& m);

/// Both routes of the symplectic membership test.
struct SymplecticCheck {
  bool gram = false;    // M^T J M == J
  bool blocks = false;  // A11^T A21, A12^T A22 symmetric and A11^T A22 - A21^T A12 == I
};
SymplecticCheck symplectic_checks(const ExactMatrix& m);

/// Requires a square even-sized matrix (ShapeMismatch otherwise). Throws if
/// the two routes ever disagree, since they are algebraically equivalent.
bool is_symplectic(const ExactMatrix& m);
bool is_orthogonal(const ExactMatrix& m);
bool is_special_orthogonal(const ExactMatrix& m);

// Group operations. Each validates its inputs and throws NotInGroup.

/// A (+) B for A in Sp(m), B in Sp(n): blocks interleaved so the result is in Sp(m+n).
ExactMatrix direct_sum_sp(const ExactMatrix& a, const ExactMatrix& b);
/// A^{(+)r}: each block replaced by its r-fold block diagonal.
ExactMatrix r_fold_sum_sp(const ExactMatrix& a, std::size_t r);
/// s: Sp(m) -> Sp(m+n), A (+) I_{2n}.
ExactMatrix stabilize(const ExactMatrix& a, std::size_t extra);
/// s_j: Sp(n) -> Sp(rn); A's blocks occupy diagonal position j (1-based).
/// Diagonal blocks are padded with I_n and off-diagonal blocks with 0.
ExactMatrix stabilization_sj(const ExactMatrix& a, std::size_t j, std::size_t r);
/// rn x rn permutation swapping n-blocks j and j+1.
ExactMatrix transposition_perm(std::size_t j, std::size_t n, std::size_t r);
/// s_{j+1}(A) == diag(P_j, P_j) s_j(A) diag(P_j, P_j).
bool verify_sj_conjugation(const ExactMatrix& a, std::size_t j, std::size_t r);

/// d: O(n) -> Sp(n), A |-> diag(A, A).
ExactMatrix doubling(const ExactMatrix& a);

/// L(A) = A (x) I_n and R(B) = I_{2m} (x) B. With the Kronecker ordering
/// used here J_{2m} (x) I_n is literally J_{2mn}.
ExactMatrix left_tensor(const ExactMatrix& a, std::size_t n);
ExactMatrix right_tensor(std::size_t m, const ExactMatrix& b);
/// Sp(m) x O(n) -> Sp(mn).
ExactMatrix tensor_sp_o(const ExactMatrix& a, const ExactMatrix& b);

/// G = J_{2m} (x) J_{2n}, the Gram matrix of B_skew (x) B_skew.
ExactMatrix skew_skew_gram(std::size_t m, std::size_t n);
/// Canonical P with P^T G P = I_{4mn}.
///
/// G is a symmetric signed permutation without fixed points, so indices
/// pair into orbits {a, a'} with G e_a = eps e_a'. For each orbit (taken in
/// increasing a) the columns are (e_a + eps e_a')/sqrt(2) and
/// i (e_a - eps e_a')/sqrt(2). Any other choice differs by O(4mn, C).
ExactMatrix change_of_basis_P(std::size_t m, std::size_t n);
/// Sp(m) x Sp(n) -> O(4mn), P^{-1} (A (x) B) P.
ExactMatrix tensor_sp_sp(const ExactMatrix& a, const ExactMatrix& b);

/// P_{m,n} with columns e_1, e_{n+1}, ..., e_{(m-1)n+1}, e_2, e_{n+2}, ...
ExactMatrix block_perm_Pmn(std::size_t m, std::size_t n);
/// L(A) == diag(P, P) A^{(+)n} diag(P^{-1}, P^{-1}) for A in Sp(m).
bool verify_L_conjugation(const ExactMatrix& a, std::size_t n);

/// A (x) B == (A (x) I_q)(I_p (x) B) for square A, B.
bool verify_mixed_product(const ExactMatrix& a, const ExactMatrix& b);

// Seeded exact generators. Membership holds by construction.

/// Product of [[I, S1], [0, I]], [[I, 0], [S2, I]] and diag(L, L^{-T}) with
/// S symmetric and L unit lower triangular over small Gaussian integers.
ExactMatrix random_sp(std::size_t m, Rng& rng);
ExactMatrix random_sp(std::size_t m, std::uint64_t seed);
/// Cayley transform (I + K)(I - K)^{-1} of a random skew K over small
/// Gaussian integers; singular draws are retried.
ExactMatrix random_so(std::size_t n, Rng& rng);
ExactMatrix random_so(std::size_t n, std::uint64_t seed);
/// random_so possibly composed with the reflection diag(1, ..., 1, -1).
ExactMatrix random_o(std::size_t n, Rng& rng);
/// Square matrix of small Gaussian integers (not necessarily invertible).
ExactMatrix random_square(std::size_t n, Rng& rng);
/// Adds 1 to one random entry. Usually, not always, leaves the group.
ExactMatrix perturb_entry(const ExactMatrix& m, Rng& rng);

}  // namespace sympdec::groups
