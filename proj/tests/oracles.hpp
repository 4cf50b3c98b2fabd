#ifndef EINALG_TESTS_ORACLES_HPP
#define EINALG_TESTS_ORACLES_HPP

// Independent reference implementations for oracle checks. Nothing here may
// call into the library's SVD/eigen kernels: inverses go through
// Gauss-Jordan elimination, ranks through row reduction, and eigenvalues
// through Householder tridiagonalization + QL on a real embedding.

#include <complex>
#include <vector>

#include "einalg/tensor.hpp"

namespace einalg::oracles {

/// Gauss-Jordan inverse with partial pivoting; throws std::runtime_error on
/// a vanishing pivot.
Matrix gauss_jordan_inverse(const Matrix& a);

/// Pseudoinverse of a full-rank matrix through the normal equations:
/// (A^H A)^-1 A^H when rows >= cols, A^H (A A^H)^-1 otherwise.
Matrix normal_equations_pinv(const MatrixView& a);

/// Rank by row reduction with partial pivoting; entries below
/// tol * max_abs(a) count as zero.
Index row_reduction_rank(const MatrixView& a, double tol = 1e-10);

/// Eigenvalues (descending) of the Hermitian Gram matrix A^H A, computed on
/// the 2n x 2n real symmetric embedding with tred2/tqli. Each eigenvalue of
/// the embedding appears twice; duplicates are collapsed.
std::vector<double> gram_eigenvalues(const MatrixView& a);

/// Singular values (descending) derived from the Gram eigenvalues.
std::vector<double> singular_values_via_gram(const MatrixView& a);

DenseTensor pinv_oracle(const DenseTensor& a);

}  // namespace einalg::oracles

#endif  // EINALG_TESTS_ORACLES_HPP
