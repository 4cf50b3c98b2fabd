#ifndef EINALG_DECOMP_HPP
#define EINALG_DECOMP_HPP

#include <vector>

#include "einalg/ops.hpp"
#include "einalg/tensor.hpp"

namespace einalg {

/// Tensor SVD a = u * d * conj_transpose(v) with u, v unitary over the row
/// and column mode groups and d diagonal of shape (row_modes, col_modes).
struct SvdFactors {
  DenseTensor u;
  DenseTensor d;
  DenseTensor v;
  std::vector<double> sigma;  // descending
};

SvdFactors tensor_svd(const DenseTensor& a);

/// Full-rank decomposition a = f * g with f left invertible of shape
/// (row_modes, [r]) and g right invertible of shape ([r], col_modes),
/// r = reshape_rank(a). Built from the thin SVD: f = U_r diag(sigma_r),
/// g = V_r^H.
struct FrdFactors {
  DenseTensor f;
  DenseTensor g;
  Index r = 0;
};

/// Throws ZeroTensor when reshape_rank(a) = 0. Negative rank_tol selects the
/// default threshold.
FrdFactors full_rank_decomposition(const DenseTensor& a, double rank_tol = -1.0);

/// Witness of FRD non-uniqueness: maps (f, g) to (f*b, b^-1*g) for an
/// invertible r x r transform b. The output reconstructs the same tensor and
/// satisfies (f*b)^dag = b^-1*f^dag and (b^-1*g)^dag = g^dag*b.
/// Throws SingularTransform when b is numerically singular.
FrdFactors frd_transform_witness(const FrdFactors& frd, const DenseTensor& b);

/// Hermitian eigendecomposition of a square tensor, p = q * diag(lambda) * q*.
/// Throws NotHermitian when ||p - p*||_F > tol * max(1, ||p||_F).
struct TensorEig {
  DenseTensor q;
  std::vector<double> lambda;  // descending
};

TensorEig hermitian_eig(const DenseTensor& p, double tol = kDefaultPredicateTol);

/// Square root and inverse square root of a Hermitian positive definite
/// tensor. Throws NotPositiveDefinite when any eigenvalue <= tol * lambda_max.
struct HpdFactors {
  DenseTensor sqrt;
  DenseTensor inv_sqrt;
  std::vector<double> eigenvalues;  // descending, all positive

  /// P^-1 reassembled from the eigendecomposition (inv_sqrt * inv_sqrt).
  DenseTensor inverse() const;
};

HpdFactors hpd_sqrt(const DenseTensor& p, double tol = kDefaultPredicateTol);

/// Inverse of a square tensor through its SVD; throws SingularTensor when
/// sigma_min <= rank_tol * sigma_max (negative rank_tol selects the default).
DenseTensor inverse(const DenseTensor& a, double rank_tol = -1.0);

}  // namespace einalg

#endif  // EINALG_DECOMP_HPP
