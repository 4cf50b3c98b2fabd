#include "einalg/ops.hpp"

#include <cmath>

#include "einalg/jacobi.hpp"

namespace einalg {

namespace {

void require_square(const DenseTensor& a, const char* what) {
  if (!a.shape().square()) {
    throw ShapeMismatch(std::string(what) + " requires row_modes == col_modes, got " +
                        a.shape().to_string());
  }
}

double predicate_scale(const DenseTensor& a) { return std::max(1.0, a.frobenius_norm()); }

}  // namespace

DenseTensor einstein_product(const DenseTensor& a, const DenseTensor& b) {
  if (a.col_modes() != b.row_modes()) {
    throw ContractionMismatch("cannot contract col modes " +
                              mode_list_to_string(a.col_modes()) + " against row modes " +
                              mode_list_to_string(b.row_modes()));
  }
  const Index m = a.row_count();
  const Index k = a.col_count();
  const Index n = b.col_count();
  std::vector<Complex> out(static_cast<size_t>(m * n));
  // Column-major product on the rsh buffers; j-k-i order keeps the accesses
  // contiguous and fixes one arithmetic path for the homomorphism property.
  const auto* pa = a.entries().data();
  const auto* pb = b.entries().data();
  for (Index j = 0; j < n; ++j) {
    for (Index l = 0; l < k; ++l) {
      const Complex bval = pb[l + j * k];
      if (bval == Complex{0.0, 0.0}) continue;
      const Complex* acol = pa + l * m;
      Complex* ocol = out.data() + j * m;
      for (Index i = 0; i < m; ++i) ocol[i] += acol[i] * bval;
    }
  }
  return DenseTensor(EinsteinShape(a.row_modes(), b.col_modes()), std::move(out));
}

DenseTensor conj_transpose(const DenseTensor& a) {
  const Index m = a.row_count();
  const Index n = a.col_count();
  std::vector<Complex> out(static_cast<size_t>(m * n));
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) {
      out[static_cast<size_t>(j + i * n)] = std::conj(a.at(i, j));
    }
  }
  return DenseTensor(a.shape().transposed(), std::move(out));
}

DenseTensor identity_tensor(const ModeList& modes) {
  if (modes.empty()) {
    throw ShapeMismatch("identity tensor requires a nonempty mode list");
  }
  EinsteinShape shape(modes, modes);
  const Index n = shape.row_count();
  std::vector<Complex> out(static_cast<size_t>(n * n));
  for (Index i = 0; i < n; ++i) out[static_cast<size_t>(i + i * n)] = 1.0;
  return DenseTensor(std::move(shape), std::move(out));
}

DenseTensor diagonal_tensor(const EinsteinShape& shape, std::span<const double> diag) {
  const Index k = std::min(shape.row_count(), shape.col_count());
  if (static_cast<Index>(diag.size()) != k) {
    throw ShapeMismatch("diagonal length does not match min(row_count, col_count)");
  }
  std::vector<Complex> out(static_cast<size_t>(shape.size()));
  for (Index i = 0; i < k; ++i) out[static_cast<size_t>(i + i * shape.row_count())] = diag[i];
  return DenseTensor(shape, std::move(out));
}

bool is_diagonal(const DenseTensor& a, double tol) {
  // Off-diagonal criterion on the linearized indices, as a Frobenius residual.
  double off = 0.0;
  for (Index j = 0; j < a.col_count(); ++j) {
    for (Index i = 0; i < a.row_count(); ++i) {
      if (i != j) off += std::norm(a.at(i, j));
    }
  }
  return std::sqrt(off) <= tol * predicate_scale(a);
}

bool is_hermitian(const DenseTensor& a, double tol) {
  require_square(a, "hermitian predicate");
  return distance(a, conj_transpose(a)) <= tol * predicate_scale(a);
}

bool is_skew_hermitian(const DenseTensor& a, double tol) {
  require_square(a, "skew-hermitian predicate");
  return distance(a, scale(conj_transpose(a), -1.0)) <= tol * predicate_scale(a);
}

bool is_unitary(const DenseTensor& a, double tol) {
  require_square(a, "unitary predicate");
  const DenseTensor id = identity_tensor(a.row_modes());
  const DenseTensor at = conj_transpose(a);
  const double r = std::max(distance(einstein_product(a, at), id),
                            distance(einstein_product(at, a), id));
  return r <= tol * predicate_scale(a);
}

bool is_idempotent(const DenseTensor& a, double tol) {
  require_square(a, "idempotent predicate");
  return distance(einstein_product(a, a), a) <= tol * predicate_scale(a);
}

StructuralFlags structural_predicates(const DenseTensor& a, double tol) {
  StructuralFlags flags;
  flags.diagonal = is_diagonal(a, tol);
  if (a.shape().square()) {
    flags.hermitian = is_hermitian(a, tol);
    flags.skew_hermitian = is_skew_hermitian(a, tol);
    flags.unitary = is_unitary(a, tol);
    flags.idempotent = is_idempotent(a, tol);
  }
  return flags;
}

Index reshape_rank(const DenseTensor& a, double tol) {
  if (a.is_zero()) return 0;
  const SvdResult svd = matrix_svd(rsh(a));
  if (svd.sigma.empty()) return 0;
  const double rel = tol < 0.0 ? default_rank_tol(a.row_count(), a.col_count()) : tol;
  const double cut = rel * svd.sigma.front();
  Index r = 0;
  for (double s : svd.sigma) {
    if (s > cut) ++r;
  }
  return r;
}

}  // namespace einalg
