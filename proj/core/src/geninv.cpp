#include "einalg/geninv.hpp"

#include <cmath>
#include <limits>

#include "einalg/jacobi.hpp"

namespace einalg {

namespace {

DenseTensor product3(const DenseTensor& a, const DenseTensor& b, const DenseTensor& c) {
  return einstein_product(einstein_product(a, b), c);
}

double hermitian_defect(const DenseTensor& t) {
  return distance(t, conj_transpose(t)) / std::max(1.0, t.frobenius_norm());
}

}  // namespace

DenseTensor mp_inverse(const DenseTensor& a, double rank_tol) {
  SvdResult svd = matrix_svd(rsh(a));
  const double rel = rank_tol < 0.0 ? default_rank_tol(a.row_count(), a.col_count()) : rank_tol;
  const double cut = svd.sigma.empty() ? 0.0 : rel * svd.sigma.front();
  const Index m = a.row_count();
  const Index n = a.col_count();
  Index r = 0;
  for (double s : svd.sigma) {
    if (s > cut) ++r;
  }
  // V_r diag(1/sigma_r) U_r^H, an n x m matrix.
  Matrix x(n, m);
  for (Index j = 0; j < m; ++j) {
    for (Index i = 0; i < n; ++i) {
      Complex s{0.0, 0.0};
      for (Index k = 0; k < r; ++k) {
        s += svd.v.at(i, k) * std::conj(svd.u.at(j, k)) / svd.sigma[static_cast<size_t>(k)];
      }
      x.at(i, j) = s;
    }
  }
  return rsh_inv(std::move(x), a.shape().transposed());
}

DenseTensor mp_inverse_frd(const DenseTensor& a, double rank_tol) {
  const FrdFactors frd = full_rank_decomposition(a, rank_tol);
  const DenseTensor fs = conj_transpose(frd.f);
  const DenseTensor gs = conj_transpose(frd.g);
  DenseTensor core_inv;
  try {
    core_inv = inverse(product3(fs, a, gs));
  } catch (const SingularTensor& e) {
    throw SingularCore(std::string("F* * A * G* core is numerically singular: ") + e.what());
  }
  return product3(gs, core_inv, fs);
}

WeightPair::WeightPair(DenseTensor m, DenseTensor n, double tol, bool require_hpd)
    : m_(std::move(m)), n_(std::move(n)) {
  if (!m_.shape().square() || !n_.shape().square()) {
    throw ShapeMismatch("weight tensors must be square over their mode group");
  }
  if (require_hpd) {
    m_factors_ = hpd_sqrt(m_, tol);
    n_factors_ = hpd_sqrt(n_, tol);
    return;
  }
  // Lenient mode: Hermitian and invertible is enough, definiteness recorded
  // by whether the square-root factors exist.
  for (const DenseTensor* w : {&m_, &n_}) {
    const TensorEig eig = hermitian_eig(*w, tol);
    double amax = 0.0;
    double amin = std::numeric_limits<double>::infinity();
    for (double l : eig.lambda) {
      amax = std::max(amax, std::abs(l));
      amin = std::min(amin, std::abs(l));
    }
    if (amax == 0.0 || amin <= tol * amax) {
      throw SingularWeight("weight tensor is numerically singular");
    }
  }
  try {
    m_factors_ = hpd_sqrt(m_, tol);
    n_factors_ = hpd_sqrt(n_, tol);
  } catch (const NotPositiveDefinite&) {
    m_factors_.reset();
    n_factors_.reset();
  }
}

const HpdFactors& WeightPair::m_factors() const {
  if (!m_factors_) throw NotPositiveDefinite("row weight is not positive definite");
  return *m_factors_;
}

const HpdFactors& WeightPair::n_factors() const {
  if (!n_factors_) throw NotPositiveDefinite("column weight is not positive definite");
  return *n_factors_;
}

void WeightPair::check_conforms(const EinsteinShape& target) const {
  if (m_.row_modes() != target.row_modes()) {
    throw ShapeMismatch("row weight modes " + mode_list_to_string(m_.row_modes()) +
                        " do not match target row modes " +
                        mode_list_to_string(target.row_modes()));
  }
  if (n_.row_modes() != target.col_modes()) {
    throw ShapeMismatch("column weight modes " + mode_list_to_string(n_.row_modes()) +
                        " do not match target col modes " +
                        mode_list_to_string(target.col_modes()));
  }
}

WeightPair WeightPair::identity(const EinsteinShape& target) {
  return WeightPair(identity_tensor(target.row_modes()), identity_tensor(target.col_modes()));
}

DenseTensor wmp_inverse(const DenseTensor& a, const WeightPair& w, double rank_tol) {
  w.check_conforms(a.shape());
  const DenseTensor& msqrt = w.m_factors().sqrt;
  const DenseTensor& nisqrt = w.n_factors().inv_sqrt;
  const DenseTensor core = mp_inverse(product3(msqrt, a, nisqrt), rank_tol);
  return product3(nisqrt, core, msqrt);
}

DenseTensor wmp_inverse_frd(const DenseTensor& a, const WeightPair& w, double rank_tol) {
  w.check_conforms(a.shape());
  const FrdFactors frd = full_rank_decomposition(a, rank_tol);
  const DenseTensor fs = conj_transpose(frd.f);
  const DenseTensor gs = conj_transpose(frd.g);
  const DenseTensor n_inv = w.n_factors().inverse();
  const DenseTensor& m = w.m();
  DenseTensor core_inv;
  try {
    core_inv = inverse(product3(product3(fs, m, a), n_inv, gs));
  } catch (const SingularTensor& e) {
    throw SingularCore(std::string("weighted FRD core is numerically singular: ") + e.what());
  }
  return product3(product3(n_inv, gs, core_inv), fs, m);
}

DenseTensor weighted_conj_transpose(const DenseTensor& a, const DenseTensor& n,
                                    const DenseTensor& m, double tol) {
  if (n.row_modes() != a.col_modes() || !n.shape().square()) {
    throw ShapeMismatch("N weight must be square over the column modes of A");
  }
  if (m.row_modes() != a.row_modes() || !m.shape().square()) {
    throw ShapeMismatch("M weight must be square over the row modes of A");
  }
  const TensorEig eig = hermitian_eig(n, tol);
  const double lmax = eig.lambda.empty() ? 0.0 : std::abs(eig.lambda.front());
  for (double l : eig.lambda) {
    if (l <= 0.0) {
      throw NotPositiveDefinite("N weight has a non-positive eigenvalue");
    }
    if (l <= tol * lmax) {
      throw SingularWeight("N weight is numerically singular");
    }
  }
  // N^-1 through the reciprocal eigenvalues keeps the inverse Hermitian.
  const Index nn = n.row_count();
  Matrix d(nn, nn);
  for (Index i = 0; i < nn; ++i) d.at(i, i) = 1.0 / eig.lambda[static_cast<size_t>(i)];
  const DenseTensor n_inv = product3(
      eig.q, rsh_inv(std::move(d), EinsteinShape(n.row_modes(), n.row_modes())),
      conj_transpose(eig.q));
  return product3(n_inv, conj_transpose(a), m);
}

CheckReport range_inclusion(const DenseTensor& b, const DenseTensor& a, double tol) {
  if (a.row_modes() != b.row_modes()) {
    throw ShapeMismatch("range inclusion requires matching row modes");
  }
  const DenseTensor proj = einstein_product(a, mp_inverse(a));
  const double resid = relative_distance(einstein_product(proj, b), b);
  return CheckReport::make("range-inclusion", {{"residual", resid}}, tol);
}

CheckReport corange_inclusion(const DenseTensor& b, const DenseTensor& a, double tol) {
  if (a.col_modes() != b.col_modes()) {
    throw ShapeMismatch("corange inclusion requires matching column modes");
  }
  const DenseTensor proj = einstein_product(mp_inverse(a), a);
  const double resid = relative_distance(einstein_product(b, proj), b);
  return CheckReport::make("corange-inclusion", {{"residual", resid}}, tol);
}

CheckReport penrose_report(const DenseTensor& a, const DenseTensor& x,
                           const std::optional<WeightPair>& w, double tol) {
  if (x.row_modes() != a.col_modes() || x.col_modes() != a.row_modes()) {
    throw ShapeMismatch("candidate inverse must have the transposed shape of A");
  }
  if (w) w->check_conforms(a.shape());
  std::map<std::string, double> res;
  res["axa"] = distance(product3(a, x, a), a) / std::max(1.0, a.frobenius_norm());
  res["xax"] = distance(product3(x, a, x), x) / std::max(1.0, x.frobenius_norm());
  const DenseTensor ax = einstein_product(a, x);
  const DenseTensor xa = einstein_product(x, a);
  if (w) {
    res["max-symmetry"] = hermitian_defect(einstein_product(w->m(), ax));
    res["nxa-symmetry"] = hermitian_defect(einstein_product(w->n(), xa));
  } else {
    res["ax-symmetry"] = hermitian_defect(ax);
    res["xa-symmetry"] = hermitian_defect(xa);
  }
  return CheckReport::make(w ? "weighted-penrose" : "penrose", std::move(res), tol);
}

}  // namespace einalg
