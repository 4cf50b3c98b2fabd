#ifndef EINALG_GENINV_HPP
#define EINALG_GENINV_HPP

#include <optional>

#include "einalg/decomp.hpp"
#include "einalg/report.hpp"

namespace einalg {

/// Moore-Penrose inverse via the truncated SVD of rsh(a). Satisfies the four
/// Penrose equations; the unique such tensor. Negative rank_tol selects the
/// default truncation threshold.
DenseTensor mp_inverse(const DenseTensor& a, double rank_tol = -1.0);

/// Moore-Penrose inverse through the full-rank decomposition:
/// G* * (F* * A * G*)^-1 * F*. Throws ZeroTensor for the zero tensor and
/// SingularCore when the r x r core is numerically singular.
DenseTensor mp_inverse_frd(const DenseTensor& a, double rank_tol = -1.0);

/// A pair of Hermitian positive definite weight tensors, M over the row
/// modes of the target tensor and N over its column modes, with their square
/// root factors cached at construction. require_hpd = false admits merely
/// Hermitian invertible weights (for counterexample studies); operations
/// that need square roots then throw NotPositiveDefinite.
class WeightPair {
 public:
  WeightPair(DenseTensor m, DenseTensor n, double tol = kDefaultPredicateTol,
             bool require_hpd = true);

  const DenseTensor& m() const { return m_; }
  const DenseTensor& n() const { return n_; }
  bool has_hpd_factors() const { return m_factors_.has_value() && n_factors_.has_value(); }
  const HpdFactors& m_factors() const;
  const HpdFactors& n_factors() const;

  /// Shapes conform to a tensor with the given shape (m over row modes,
  /// n over column modes); throws ShapeMismatch otherwise.
  void check_conforms(const EinsteinShape& target) const;

  /// Identity weights for the given target shape.
  static WeightPair identity(const EinsteinShape& target);

 private:
  DenseTensor m_;
  DenseTensor n_;
  std::optional<HpdFactors> m_factors_;
  std::optional<HpdFactors> n_factors_;
};

/// Weighted Moore-Penrose inverse by the square-root route:
/// N^-1/2 * (M^1/2 * A * N^-1/2)^dag * M^1/2. Satisfies the four weighted
/// Penrose equations; reduces to mp_inverse for identity weights.
DenseTensor wmp_inverse(const DenseTensor& a, const WeightPair& w, double rank_tol = -1.0);

/// Weighted Moore-Penrose inverse through the full-rank decomposition:
/// N^-1 * G* * (F* * M * A * N^-1 * G*)^-1 * F* * M. Independent of the
/// square-root route up to the shared SVD kernel.
DenseTensor wmp_inverse_frd(const DenseTensor& a, const WeightPair& w,
                            double rank_tol = -1.0);

/// Weighted conjugate transpose A#_{N,M} = N^-1 * A* * M with N over the
/// column modes of a and M over its row modes. The weight inverses come from
/// their eigendecompositions. Throws NotPositiveDefinite or SingularWeight
/// for inadmissible weights.
DenseTensor weighted_conj_transpose(const DenseTensor& a, const DenseTensor& n,
                                    const DenseTensor& m,
                                    double tol = kDefaultPredicateTol);

/// Range inclusion R(b) subset of R(a), decided by the residual of
/// a * a^dag * b = b relative to max(1, ||b||_F).
CheckReport range_inclusion(const DenseTensor& b, const DenseTensor& a, double tol);

/// Corange inclusion R(b*) subset of R(a*), decided by b * a^dag * a = b.
CheckReport corange_inclusion(const DenseTensor& b, const DenseTensor& a, double tol);

/// Residuals of the four Penrose equations for the candidate inverse x of a;
/// weighted variants (conditions 3 and 4 symmetrized by w.m and w.n) when a
/// weight pair is given. Only the raw weight tensors are used, so indefinite
/// Hermitian pairs built with require_hpd = false are accepted.
CheckReport penrose_report(const DenseTensor& a, const DenseTensor& x,
                           const std::optional<WeightPair>& w, double tol);

}  // namespace einalg

#endif  // EINALG_GENINV_HPP
