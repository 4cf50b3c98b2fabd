#include "einalg/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace einalg {

namespace {

constexpr int kMaxSweeps = 30;
constexpr double kOffdiagRel = 1e-15;

double col_norm_sq(const Matrix& b, Index j) {
  double s = 0.0;
  for (Index i = 0; i < b.rows; ++i) s += std::norm(b.at(i, j));
  return s;
}

Complex col_dot(const Matrix& b, Index p, Index q) {
  Complex s{0.0, 0.0};
  for (Index i = 0; i < b.rows; ++i) s += std::conj(b.at(i, p)) * b.at(i, q);
  return s;
}

// Real rotation parameters diagonalizing [[alpha, g],[g, beta]] with g > 0.
void rotation_params(double alpha, double beta, double g, double& c, double& s) {
  const double tau = (beta - alpha) / (2.0 * g);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  c = 1.0 / std::sqrt(1.0 + t * t);
  s = c * t;
}

// Columns p and q of both matrices rotated by the same unitary: column q is
// first de-phased by conj(omega), then the real rotation is applied.
void rotate_columns(Matrix& b, Matrix& v, Index p, Index q, Complex omega, double c, double s) {
  const Complex wbar = std::conj(omega);
  for (Index i = 0; i < b.rows; ++i) {
    const Complex bp = b.at(i, p);
    const Complex bq = b.at(i, q) * wbar;
    b.at(i, p) = c * bp - s * bq;
    b.at(i, q) = s * bp + c * bq;
  }
  for (Index i = 0; i < v.rows; ++i) {
    const Complex vp = v.at(i, p);
    const Complex vq = v.at(i, q) * wbar;
    v.at(i, p) = c * vp - s * vq;
    v.at(i, q) = s * vp + c * vq;
  }
}

// Phase making the first entry of largest modulus real nonnegative.
Complex column_phase(const Matrix& u, Index j) {
  Index arg = 0;
  double best = -1.0;
  for (Index i = 0; i < u.rows; ++i) {
    const double a = std::abs(u.at(i, j));
    if (a > best) {
      best = a;
      arg = i;
    }
  }
  const Complex z = u.at(arg, j);
  const double a = std::abs(z);
  return a == 0.0 ? Complex{1.0, 0.0} : std::conj(z) / a;
}

void scale_column(Matrix& m, Index j, Complex f) {
  for (Index i = 0; i < m.rows; ++i) m.at(i, j) *= f;
}

// Deterministic completion of partially filled orthonormal columns
// [filled, u.cols) with Gram-Schmidt over the standard basis.
void complete_basis(Matrix& u, Index filled) {
  for (Index j = filled; j < u.cols; ++j) {
    bool placed = false;
    for (Index cand = 0; cand < u.rows && !placed; ++cand) {
      std::vector<Complex> w(static_cast<size_t>(u.rows));
      w[static_cast<size_t>(cand)] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (Index k = 0; k < j; ++k) {
          Complex proj{0.0, 0.0};
          for (Index i = 0; i < u.rows; ++i) proj += std::conj(u.at(i, k)) * w[static_cast<size_t>(i)];
          for (Index i = 0; i < u.rows; ++i) w[static_cast<size_t>(i)] -= proj * u.at(i, k);
        }
      }
      double nrm = 0.0;
      for (const Complex& z : w) nrm += std::norm(z);
      nrm = std::sqrt(nrm);
      if (nrm > 1e-3) {
        for (Index i = 0; i < u.rows; ++i) u.at(i, j) = w[static_cast<size_t>(i)] / nrm;
        placed = true;
      }
    }
    if (!placed) {
      throw NoConvergence("basis completion failed; left factor columns degenerate");
    }
  }
}

// One-sided Jacobi on a matrix with rows >= cols.
SvdResult svd_tall(const MatrixView& m) {
  const Index rows = m.rows, cols = m.cols;
  Matrix b = m.to_matrix();
  Matrix v = Matrix::identity(cols);

  bool converged = cols < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (Index p = 0; p < cols - 1; ++p) {
      for (Index q = p + 1; q < cols; ++q) {
        const double alpha = col_norm_sq(b, p);
        const double beta = col_norm_sq(b, q);
        const Complex gamma = col_dot(b, p, q);
        const double g = std::abs(gamma);
        if (g <= kOffdiagRel * std::sqrt(alpha * beta) || g == 0.0) continue;
        converged = false;
        const Complex omega = gamma / g;
        double c, s;
        rotation_params(alpha, beta, g, c, s);
        rotate_columns(b, v, p, q, omega, c, s);
      }
    }
  }
  if (!converged) {
    throw NoConvergence("one-sided Jacobi SVD did not converge in 30 sweeps");
  }

  std::vector<double> sigma(static_cast<size_t>(cols));
  for (Index j = 0; j < cols; ++j) sigma[static_cast<size_t>(j)] = std::sqrt(col_norm_sq(b, j));

  std::vector<Index> order(static_cast<size_t>(cols));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index x, Index y) { return sigma[static_cast<size_t>(x)] > sigma[static_cast<size_t>(y)]; });

  Matrix u(rows, rows);
  Matrix vs(cols, cols);
  std::vector<double> sorted(static_cast<size_t>(cols));
  Index filled = 0;
  for (Index j = 0; j < cols; ++j) {
    const Index src = order[static_cast<size_t>(j)];
    sorted[static_cast<size_t>(j)] = sigma[static_cast<size_t>(src)];
    for (Index i = 0; i < cols; ++i) vs.at(i, j) = v.at(i, src);
    if (sigma[static_cast<size_t>(src)] > 0.0) {
      for (Index i = 0; i < rows; ++i) u.at(i, j) = b.at(i, src) / sigma[static_cast<size_t>(src)];
      filled = j + 1;
    }
  }
  complete_basis(u, filled);
  return SvdResult{std::move(u), std::move(sorted), std::move(vs)};
}

Matrix adjoint(const MatrixView& m) {
  Matrix out(m.cols, m.rows);
  for (Index j = 0; j < m.cols; ++j) {
    for (Index i = 0; i < m.rows; ++i) out.at(j, i) = std::conj(m.at(i, j));
  }
  return out;
}

void apply_sign_convention(SvdResult& r) {
  const Index k = static_cast<Index>(r.sigma.size());
  for (Index j = 0; j < r.u.cols; ++j) {
    const Complex phase = column_phase(r.u, j);
    scale_column(r.u, j, phase);
    if (j < k && r.sigma[static_cast<size_t>(j)] > 0.0) {
      scale_column(r.v, j, phase);
    }
  }
  for (Index j = 0; j < r.v.cols; ++j) {
    if (j < k && r.sigma[static_cast<size_t>(j)] > 0.0) continue;
    scale_column(r.v, j, column_phase(r.v, j));
  }
}

}  // namespace

double default_rank_tol(Index rows, Index cols) {
  return static_cast<double>(std::max(rows, cols)) * std::ldexp(1.0, -52);
}

SvdResult matrix_svd(const MatrixView& m) {
  if (m.rows <= 0 || m.cols <= 0) {
    throw ShapeMismatch("matrix_svd requires positive dimensions");
  }
  SvdResult r;
  if (m.rows >= m.cols) {
    r = svd_tall(m);
  } else {
    const Matrix mh = adjoint(m);
    SvdResult rt = svd_tall(MatrixView{mh.rows, mh.cols, mh.data});
    r = SvdResult{std::move(rt.v), std::move(rt.sigma), std::move(rt.u)};
  }
  apply_sign_convention(r);
  return r;
}

HermitianEigResult hermitian_eig_matrix(const MatrixView& h) {
  if (h.rows != h.cols) {
    throw ShapeMismatch("hermitian_eig_matrix requires a square matrix");
  }
  const Index n = h.rows;
  // Symmetrize: strict lower triangle taken as conjugate of the upper.
  Matrix a(n, n);
  double norm_sq = 0.0;
  for (Index j = 0; j < n; ++j) {
    a.at(j, j) = Complex{h.at(j, j).real(), 0.0};
    norm_sq += std::norm(a.at(j, j));
    for (Index i = 0; i < j; ++i) {
      const Complex z = 0.5 * (h.at(i, j) + std::conj(h.at(j, i)));
      a.at(i, j) = z;
      a.at(j, i) = std::conj(z);
      norm_sq += 2.0 * std::norm(z);
    }
  }
  const double thresh = kOffdiagRel * std::sqrt(norm_sq);
  Matrix q = Matrix::identity(n);

  bool converged = n < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (Index p = 0; p < n - 1; ++p) {
      for (Index qq = p + 1; qq < n; ++qq) {
        const Complex apq = a.at(p, qq);
        const double g = std::abs(apq);
        if (g <= thresh || g == 0.0) continue;
        converged = false;
        const Complex omega = apq / g;
        const Complex wbar = std::conj(omega);
        double c, s;
        rotation_params(a.at(p, p).real(), a.at(qq, qq).real(), g, c, s);
        // Column update A <- A J with J = P G (P de-phases column qq).
        for (Index i = 0; i < n; ++i) {
          const Complex xp = a.at(i, p);
          const Complex xq = a.at(i, qq) * wbar;
          a.at(i, p) = c * xp - s * xq;
          a.at(i, qq) = s * xp + c * xq;
        }
        // Row update A <- J^H A.
        for (Index i = 0; i < n; ++i) {
          const Complex xp = a.at(p, i);
          const Complex xq = a.at(qq, i) * omega;
          a.at(p, i) = c * xp - s * xq;
          a.at(qq, i) = s * xp + c * xq;
        }
        for (Index i = 0; i < n; ++i) {
          const Complex xp = q.at(i, p);
          const Complex xq = q.at(i, qq) * wbar;
          q.at(i, p) = c * xp - s * xq;
          q.at(i, qq) = s * xp + c * xq;
        }
      }
    }
  }
  if (!converged) {
    throw NoConvergence("Hermitian Jacobi eigensolver did not converge in 30 sweeps");
  }

  std::vector<double> lambda(static_cast<size_t>(n));
  for (Index j = 0; j < n; ++j) lambda[static_cast<size_t>(j)] = a.at(j, j).real();
  std::vector<Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index x, Index y) { return lambda[static_cast<size_t>(x)] > lambda[static_cast<size_t>(y)]; });

  HermitianEigResult out;
  out.q = Matrix(n, n);
  out.lambda.resize(static_cast<size_t>(n));
  for (Index j = 0; j < n; ++j) {
    const Index src = order[static_cast<size_t>(j)];
    out.lambda[static_cast<size_t>(j)] = lambda[static_cast<size_t>(src)];
    for (Index i = 0; i < n; ++i) out.q.at(i, j) = q.at(i, src);
  }
  for (Index j = 0; j < n; ++j) {
    scale_column(out.q, j, column_phase(out.q, j));
  }
  return out;
}

}  // namespace einalg
