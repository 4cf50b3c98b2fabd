#ifndef EINALG_OPS_HPP
#define EINALG_OPS_HPP

#include <optional>

#include "einalg/tensor.hpp"

namespace einalg {

/// Einstein product A *_N B: contracts the column modes of a against the row
/// modes of b, which must match elementwise (contracting a [2,3] group
/// against a [3,2] group is an error even though the products agree).
/// Result shape: (a.row_modes, b.col_modes). Equals
/// rsh_inv(rsh(a) * rsh(b)) by the reshape homomorphism.
DenseTensor einstein_product(const DenseTensor& a, const DenseTensor& b);

/// Conjugate transpose A*: mode groups swapped, entries conjugated.
DenseTensor conj_transpose(const DenseTensor& a);

/// Identity tensor over the given (nonempty) mode list; rsh of it is the
/// identity matrix.
DenseTensor identity_tensor(const ModeList& modes);

/// Diagonal tensor with the given values on the linearized main diagonal.
DenseTensor diagonal_tensor(const EinsteinShape& shape, std::span<const double> diag);

struct StructuralFlags {
  bool diagonal = false;
  // Square-only predicates; empty when row and column mode lists differ.
  std::optional<bool> hermitian;
  std::optional<bool> skew_hermitian;
  std::optional<bool> unitary;
  std::optional<bool> idempotent;
};

constexpr double kDefaultPredicateTol = 1e-10;

// Each predicate holds iff its defining residual is <= tol * max(1, ||A||_F).
// The square-only predicates throw ShapeMismatch when row and column mode
// lists differ.
bool is_diagonal(const DenseTensor& a, double tol = kDefaultPredicateTol);
bool is_hermitian(const DenseTensor& a, double tol = kDefaultPredicateTol);
bool is_skew_hermitian(const DenseTensor& a, double tol = kDefaultPredicateTol);
bool is_unitary(const DenseTensor& a, double tol = kDefaultPredicateTol);
bool is_idempotent(const DenseTensor& a, double tol = kDefaultPredicateTol);

/// All flags at once; square-only flags are empty for non-square shapes.
StructuralFlags structural_predicates(const DenseTensor& a,
                                      double tol = kDefaultPredicateTol);

/// Reshaping rank: number of singular values of rsh(a) exceeding
/// tol * sigma_max. Negative tol selects the default threshold
/// max(rows, cols) * 2^-52. Zero tensors have rank 0.
Index reshape_rank(const DenseTensor& a, double tol = -1.0);

}  // namespace einalg

#endif  // EINALG_OPS_HPP
