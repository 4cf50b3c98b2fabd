#ifndef EINALG_TENSOR_HPP
#define EINALG_TENSOR_HPP

#include <complex>
#include <span>
#include <vector>

#include "einalg/shape.hpp"

namespace einalg {

using Complex = std::complex<double>;

/// Owning dense complex matrix, column-major.
struct Matrix {
  Index rows = 0;
  Index cols = 0;
  std::vector<Complex> data;

  Matrix() = default;
  Matrix(Index r, Index c) : rows(r), cols(c), data(static_cast<size_t>(r * c)) {}
  Matrix(Index r, Index c, std::vector<Complex> d);

  Complex& at(Index i, Index j) { return data[static_cast<size_t>(i + j * rows)]; }
  const Complex& at(Index i, Index j) const { return data[static_cast<size_t>(i + j * rows)]; }

  static Matrix identity(Index n);
};

/// Non-owning view of a column-major matrix.
struct MatrixView {
  Index rows = 0;
  Index cols = 0;
  std::span<const Complex> data;

  const Complex& at(Index i, Index j) const { return data[static_cast<size_t>(i + j * rows)]; }
  Matrix to_matrix() const { return Matrix(rows, cols, {data.begin(), data.end()}); }
};

/// Dense arbitrary-order complex tensor with an explicit row-mode/column-mode
/// split. The flat buffer is exactly rsh(A): entry (i_1..i_M, j_1..j_N) lives
/// at (I_lin - 1) + (J_lin - 1) * row_count with the first index of each
/// group running fastest, so reshaping is a zero-copy reinterpretation.
/// Values are immutable after construction; all entries must be finite.
class DenseTensor {
 public:
  DenseTensor() = default;
  DenseTensor(EinsteinShape shape, std::vector<Complex> entries);

  static DenseTensor zeros(EinsteinShape shape);

  const EinsteinShape& shape() const { return shape_; }
  const ModeList& row_modes() const { return shape_.row_modes(); }
  const ModeList& col_modes() const { return shape_.col_modes(); }
  Index row_count() const { return shape_.row_count(); }
  Index col_count() const { return shape_.col_count(); }
  Index size() const { return shape_.size(); }

  std::span<const Complex> entries() const { return entries_; }
  const Complex& flat(Index pos) const { return entries_[static_cast<size_t>(pos)]; }
  /// Entry by linearized row/column index (0-based).
  const Complex& at(Index row_lin, Index col_lin) const {
    return entries_[static_cast<size_t>(row_lin + col_lin * row_count())];
  }

  double frobenius_norm() const;
  double max_abs() const;
  bool is_zero() const;

 private:
  EinsteinShape shape_;
  std::vector<Complex> entries_;
};

/// The reshape map: reinterpret the tensor buffer as its
/// row_count x col_count matrix. No data movement.
MatrixView rsh(const DenseTensor& t);

/// Inverse reshape: wrap a matrix buffer as a tensor with the target shape.
/// Throws ShapeMismatch when the matrix dimensions do not match the target's
/// mode products. Bit-exact round trip with rsh.
DenseTensor rsh_inv(Matrix m, const EinsteinShape& target);
DenseTensor rsh_inv(const MatrixView& m, const EinsteinShape& target);

// Elementwise arithmetic (shapes must match exactly).
DenseTensor add(const DenseTensor& a, const DenseTensor& b);
DenseTensor subtract(const DenseTensor& a, const DenseTensor& b);
DenseTensor scale(const DenseTensor& a, Complex factor);

/// Frobenius distance ||a - b||_F; shapes must match.
double distance(const DenseTensor& a, const DenseTensor& b);
/// Max-abs entrywise distance; shapes must match.
double max_abs_distance(const DenseTensor& a, const DenseTensor& b);
/// ||a - b||_F / max(1, ||b||_F); shapes must match.
double relative_distance(const DenseTensor& a, const DenseTensor& b);

}  // namespace einalg

#endif  // EINALG_TENSOR_HPP
