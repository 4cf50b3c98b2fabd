#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace einalg::oracles {

namespace {

Matrix adjoint(const MatrixView& m) {
  Matrix out(m.cols, m.rows);
  for (Index j = 0; j < m.cols; ++j) {
    for (Index i = 0; i < m.rows; ++i) out.at(j, i) = std::conj(m.at(i, j));
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows, b.cols);
  for (Index j = 0; j < b.cols; ++j) {
    for (Index l = 0; l < a.cols; ++l) {
      const Complex bv = b.at(l, j);
      if (bv == Complex{}) continue;
      for (Index i = 0; i < a.rows; ++i) c.at(i, j) += a.at(i, l) * bv;
    }
  }
  return c;
}

}  // namespace

Matrix gauss_jordan_inverse(const Matrix& a) {
  if (a.rows != a.cols) throw std::runtime_error("gauss_jordan_inverse: not square");
  const Index n = a.rows;
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  for (Index col = 0; col < n; ++col) {
    Index pivot = col;
    double best = std::abs(work.at(col, col));
    for (Index r = col + 1; r < n; ++r) {
      const double v = std::abs(work.at(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < 1e-13) throw std::runtime_error("gauss_jordan_inverse: singular matrix");
    if (pivot != col) {
      for (Index j = 0; j < n; ++j) {
        std::swap(work.at(col, j), work.at(pivot, j));
        std::swap(inv.at(col, j), inv.at(pivot, j));
      }
    }
    const Complex d = work.at(col, col);
    for (Index j = 0; j < n; ++j) {
      work.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (Index r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = work.at(r, col);
      if (f == Complex{}) continue;
      for (Index j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Matrix normal_equations_pinv(const MatrixView& a) {
  const Matrix ah = adjoint(a);
  const Matrix am = a.to_matrix();
  if (a.rows >= a.cols) {
    const Matrix gram = multiply(ah, am);
    return multiply(gauss_jordan_inverse(gram), ah);
  }
  const Matrix gram = multiply(am, ah);
  return multiply(ah, gauss_jordan_inverse(gram));
}

Index row_reduction_rank(const MatrixView& a, double tol) {
  Matrix work = a.to_matrix();
  double scale = 0.0;
  for (const Complex& z : work.data) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return 0;
  const double cut = tol * scale;
  Index rank = 0;
  Index row = 0;
  for (Index col = 0; col < work.cols && row < work.rows; ++col) {
    Index pivot = row;
    double best = std::abs(work.at(row, col));
    for (Index r = row + 1; r < work.rows; ++r) {
      const double v = std::abs(work.at(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best <= cut) continue;
    if (pivot != row) {
      for (Index j = 0; j < work.cols; ++j) std::swap(work.at(row, j), work.at(pivot, j));
    }
    for (Index r = row + 1; r < work.rows; ++r) {
      const Complex f = work.at(r, col) / work.at(row, col);
      for (Index j = col; j < work.cols; ++j) work.at(r, j) -= f * work.at(row, j);
    }
    ++rank;
    ++row;
  }
  return rank;
}

namespace {

// Householder reduction of a real symmetric matrix to tridiagonal form
// (tred2, eigenvalues only) followed by QL with implicit shifts (tqli).
std::vector<double> real_symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const size_t n = a.size();
  std::vector<double> d(n, 0.0), e(n, 0.0);

  for (size_t i = n - 1; i >= 1; --i) {
    const size_t l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (size_t k = 0; k <= l; ++k) scale += std::abs(a[i][k]);
      if (scale == 0.0) {
        e[i] = a[i][l];
      } else {
        for (size_t k = 0; k <= l; ++k) {
          a[i][k] /= scale;
          h += a[i][k] * a[i][k];
        }
        double f = a[i][l];
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a[i][l] = f - g;
        f = 0.0;
        for (size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (size_t k = 0; k <= j; ++k) g += a[j][k] * a[i][k];
          for (size_t k = j + 1; k <= l; ++k) g += a[k][j] * a[i][k];
          e[j] = g / h;
          f += e[j] * a[i][j];
        }
        const double hh = f / (h + h);
        for (size_t j = 0; j <= l; ++j) {
          f = a[i][j];
          e[j] = g = e[j] - hh * f;
          for (size_t k = 0; k <= j; ++k) a[j][k] -= f * e[k] + g * a[i][k];
        }
      }
    } else {
      e[i] = a[i][l];
    }
    d[i] = h;
  }
  e[0] = 0.0;
  for (size_t i = 0; i < n; ++i) d[i] = a[i][i];

  // tqli (eigenvalues only)
  for (size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (size_t l = 0; l < n; ++l) {
    int iter = 0;
    size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 + 1e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 50) throw std::runtime_error("tqli: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end(), std::greater<double>());
  return d;
}

}  // namespace

std::vector<double> gram_eigenvalues(const MatrixView& a) {
  const Matrix gram = multiply(adjoint(a), a.to_matrix());
  const size_t n = static_cast<size_t>(gram.rows);
  // Real symmetric embedding [[Re, -Im], [Im, Re]]; spectrum doubles.
  std::vector<std::vector<double>> emb(2 * n, std::vector<double>(2 * n, 0.0));
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) {
      const Complex z = gram.at(static_cast<Index>(i), static_cast<Index>(j));
      emb[i][j] = z.real();
      emb[i + n][j + n] = z.real();
      emb[i][j + n] = -z.imag();
      emb[i + n][j] = z.imag();
    }
  }
  const std::vector<double> all = real_symmetric_eigenvalues(std::move(emb));
  std::vector<double> out;
  for (size_t k = 0; k < all.size(); k += 2) out.push_back(all[k]);
  return out;
}

std::vector<double> singular_values_via_gram(const MatrixView& a) {
  std::vector<double> lam = gram_eigenvalues(a);
  for (double& l : lam) l = std::sqrt(std::max(l, 0.0));
  return lam;
}

DenseTensor pinv_oracle(const DenseTensor& a) {
  Matrix p = normal_equations_pinv(rsh(a));
  return rsh_inv(std::move(p), a.shape().transposed());
}

}  // namespace einalg::oracles
