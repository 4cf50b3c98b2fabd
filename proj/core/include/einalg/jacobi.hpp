#ifndef EINALG_JACOBI_HPP
#define EINALG_JACOBI_HPP

#include <vector>

#include "einalg/tensor.hpp"

namespace einalg {

struct SvdResult {
  Matrix u;                   // rows x rows, unitary
  std::vector<double> sigma;  // min(rows, cols), descending, nonnegative
  Matrix v;                   // cols x cols, unitary
};

/// Deterministic one-sided Jacobi SVD, m = U diag(sigma) V^H.
///
/// Fixed row-cyclic sweep order; a column pair is rotated while
/// |<b_p, b_q>| > 1e-15 * ||b_p|| * ||b_q||. Sign convention: in each left
/// singular vector paired with a nonzero singular value, the first entry of
/// largest modulus is made real nonnegative (the matching right vector
/// absorbs the phase); remaining basis columns are phase-fixed the same way
/// independently. Throws NoConvergence after 30 sweeps.
SvdResult matrix_svd(const MatrixView& m);

struct HermitianEigResult {
  Matrix q;                    // n x n, unitary
  std::vector<double> lambda;  // descending, real
};

/// Cyclic complex Jacobi eigendecomposition of a Hermitian matrix,
/// h = Q diag(lambda) Q^H. The caller is responsible for Hermitian input
/// (the strict lower triangle is taken as the conjugate of the upper).
/// Throws NoConvergence after 30 sweeps.
HermitianEigResult hermitian_eig_matrix(const MatrixView& h);

/// Default rank-truncation threshold relative to sigma_max:
/// max(rows, cols) * 2^-52.
double default_rank_tol(Index rows, Index cols);

}  // namespace einalg

#endif  // EINALG_JACOBI_HPP
