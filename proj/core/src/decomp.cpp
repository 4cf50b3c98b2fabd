#include "einalg/decomp.hpp"

#include <cmath>

#include "einalg/jacobi.hpp"

namespace einalg {

namespace {

Matrix diag_matrix(Index rows, Index cols, std::span<const double> d) {
  Matrix m(rows, cols);
  const Index k = std::min(rows, cols);
  for (Index i = 0; i < k && i < static_cast<Index>(d.size()); ++i) m.at(i, i) = d[i];
  return m;
}

}  // namespace

SvdFactors tensor_svd(const DenseTensor& a) {
  SvdResult svd = matrix_svd(rsh(a));
  const EinsteinShape ushape(a.row_modes(), a.row_modes());
  const EinsteinShape vshape(a.col_modes(), a.col_modes());
  SvdFactors out;
  out.d = rsh_inv(diag_matrix(a.row_count(), a.col_count(), svd.sigma), a.shape());
  out.u = rsh_inv(std::move(svd.u), ushape);
  out.v = rsh_inv(std::move(svd.v), vshape);
  out.sigma = std::move(svd.sigma);
  return out;
}

FrdFactors full_rank_decomposition(const DenseTensor& a, double rank_tol) {
  SvdResult svd = matrix_svd(rsh(a));
  const double rel = rank_tol < 0.0 ? default_rank_tol(a.row_count(), a.col_count()) : rank_tol;
  const double cut = svd.sigma.empty() ? 0.0 : rel * svd.sigma.front();
  Index r = 0;
  for (double s : svd.sigma) {
    if (s > cut) ++r;
  }
  if (r == 0) {
    throw ZeroTensor("full-rank decomposition requires a nonzero tensor");
  }
  const Index m = a.row_count();
  const Index n = a.col_count();
  Matrix f(m, r);
  for (Index j = 0; j < r; ++j) {
    const double s = svd.sigma[static_cast<size_t>(j)];
    for (Index i = 0; i < m; ++i) f.at(i, j) = svd.u.at(i, j) * s;
  }
  Matrix g(r, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < r; ++i) g.at(i, j) = std::conj(svd.v.at(j, i));
  }
  FrdFactors out;
  out.f = rsh_inv(std::move(f), EinsteinShape(a.row_modes(), {r}));
  out.g = rsh_inv(std::move(g), EinsteinShape({r}, a.col_modes()));
  out.r = r;
  return out;
}

FrdFactors frd_transform_witness(const FrdFactors& frd, const DenseTensor& b) {
  const ModeList rank_mode{frd.r};
  if (b.row_modes() != rank_mode || b.col_modes() != rank_mode) {
    throw ShapeMismatch("transform must be square over the rank mode [" +
                        std::to_string(frd.r) + "]");
  }
  DenseTensor b_inv;
  try {
    b_inv = inverse(b);
  } catch (const SingularTensor& e) {
    throw SingularTransform(std::string("FRD transform is numerically singular: ") + e.what());
  }
  FrdFactors out;
  out.f = einstein_product(frd.f, b);
  out.g = einstein_product(b_inv, frd.g);
  out.r = frd.r;
  return out;
}

TensorEig hermitian_eig(const DenseTensor& p, double tol) {
  if (!p.shape().square()) {
    throw ShapeMismatch("hermitian_eig requires row_modes == col_modes, got " +
                        p.shape().to_string());
  }
  const double resid = distance(p, conj_transpose(p));
  if (resid > tol * std::max(1.0, p.frobenius_norm())) {
    throw NotHermitian("hermitian residual " + std::to_string(resid) + " exceeds tolerance");
  }
  HermitianEigResult eig = hermitian_eig_matrix(rsh(p));
  TensorEig out;
  out.q = rsh_inv(std::move(eig.q), EinsteinShape(p.row_modes(), p.row_modes()));
  out.lambda = std::move(eig.lambda);
  return out;
}

DenseTensor HpdFactors::inverse() const { return einstein_product(inv_sqrt, inv_sqrt); }

HpdFactors hpd_sqrt(const DenseTensor& p, double tol) {
  TensorEig eig = hermitian_eig(p, tol);
  const double lmax = eig.lambda.empty() ? 0.0 : eig.lambda.front();
  for (double l : eig.lambda) {
    if (l <= tol * std::max(lmax, 0.0)) {
      throw NotPositiveDefinite("eigenvalue " + std::to_string(l) +
                                " is not positive; tensor is not HPD");
    }
  }
  const Index n = p.row_count();
  std::vector<double> rt(eig.lambda.size()), irt(eig.lambda.size());
  for (size_t k = 0; k < eig.lambda.size(); ++k) {
    rt[k] = std::sqrt(eig.lambda[k]);
    irt[k] = 1.0 / rt[k];
  }
  const DenseTensor qh = conj_transpose(eig.q);
  const EinsteinShape dshape(p.row_modes(), p.row_modes());
  HpdFactors out;
  out.sqrt = einstein_product(einstein_product(eig.q, rsh_inv(diag_matrix(n, n, rt), dshape)), qh);
  out.inv_sqrt =
      einstein_product(einstein_product(eig.q, rsh_inv(diag_matrix(n, n, irt), dshape)), qh);
  out.eigenvalues = std::move(eig.lambda);
  return out;
}

DenseTensor inverse(const DenseTensor& a, double rank_tol) {
  if (a.row_count() != a.col_count()) {
    throw ShapeMismatch("inverse requires a square reshaping, got " + a.shape().to_string());
  }
  SvdResult svd = matrix_svd(rsh(a));
  const double rel = rank_tol < 0.0 ? default_rank_tol(a.row_count(), a.col_count()) : rank_tol;
  const Index n = a.row_count();
  const double smax = svd.sigma.empty() ? 0.0 : svd.sigma.front();
  const double smin = svd.sigma.empty() ? 0.0 : svd.sigma.back();
  if (smin <= rel * smax || smax == 0.0) {
    throw SingularTensor("condition estimate " +
                         std::to_string(smin > 0.0 ? smax / smin : 0.0) +
                         " marks the tensor as numerically singular");
  }
  // V diag(1/sigma) U^H
  Matrix inv(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      Complex s{0.0, 0.0};
      for (Index k = 0; k < n; ++k) {
        s += svd.v.at(i, k) * std::conj(svd.u.at(j, k)) / svd.sigma[static_cast<size_t>(k)];
      }
      inv.at(i, j) = s;
    }
  }
  return rsh_inv(std::move(inv), a.shape().transposed());
}

}  // namespace einalg
