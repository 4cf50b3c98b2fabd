#include "einalg/tensor.hpp"

#include <cmath>

namespace einalg {

namespace {

void check_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidValue("tensor entry is not finite");
    }
  }
}

void check_same_shape(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape()) {
    throw ShapeMismatch("shape " + a.shape().to_string() + " does not match " +
                        b.shape().to_string());
  }
}

}  // namespace

Matrix::Matrix(Index r, Index c, std::vector<Complex> d) : rows(r), cols(c), data(std::move(d)) {
  if (static_cast<Index>(data.size()) != r * c) {
    throw ShapeMismatch("matrix buffer length does not match rows*cols");
  }
}

Matrix Matrix::identity(Index n) {
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseTensor::DenseTensor(EinsteinShape shape, std::vector<Complex> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<Index>(entries_.size()) != shape_.size()) {
    throw ShapeMismatch("entry buffer length " + std::to_string(entries_.size()) +
                        " does not match shape " + shape_.to_string());
  }
  check_finite(entries_);
}

DenseTensor DenseTensor::zeros(EinsteinShape shape) {
  std::vector<Complex> buf(static_cast<size_t>(shape.size()));
  return DenseTensor(std::move(shape), std::move(buf));
}

double DenseTensor::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

double DenseTensor::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

bool DenseTensor::is_zero() const {
  for (const Complex& z : entries_) {
    if (z != Complex{0.0, 0.0}) return false;
  }
  return true;
}

MatrixView rsh(const DenseTensor& t) {
  return MatrixView{t.row_count(), t.col_count(), t.entries()};
}

DenseTensor rsh_inv(Matrix m, const EinsteinShape& target) {
  if (m.rows != target.row_count() || m.cols != target.col_count()) {
    throw ShapeMismatch("matrix " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                        " cannot be reshaped to " + target.to_string());
  }
  return DenseTensor(target, std::move(m.data));
}

DenseTensor rsh_inv(const MatrixView& m, const EinsteinShape& target) {
  return rsh_inv(m.to_matrix(), target);
}

DenseTensor add(const DenseTensor& a, const DenseTensor& b) {
  check_same_shape(a, b);
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (size_t k = 0; k < out.size(); ++k) out[k] += b.entries()[k];
  return DenseTensor(a.shape(), std::move(out));
}

DenseTensor subtract(const DenseTensor& a, const DenseTensor& b) {
  check_same_shape(a, b);
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (size_t k = 0; k < out.size(); ++k) out[k] -= b.entries()[k];
  return DenseTensor(a.shape(), std::move(out));
}

DenseTensor scale(const DenseTensor& a, Complex factor) {
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (Complex& z : out) z *= factor;
  return DenseTensor(a.shape(), std::move(out));
}

double distance(const DenseTensor& a, const DenseTensor& b) {
  check_same_shape(a, b);
  double sum = 0.0;
  for (size_t k = 0; k < a.entries().size(); ++k) {
    sum += std::norm(a.entries()[k] - b.entries()[k]);
  }
  return std::sqrt(sum);
}

double max_abs_distance(const DenseTensor& a, const DenseTensor& b) {
  check_same_shape(a, b);
  double m = 0.0;
  for (size_t k = 0; k < a.entries().size(); ++k) {
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return m;
}

double relative_distance(const DenseTensor& a, const DenseTensor& b) {
  return distance(a, b) / std::max(1.0, b.frobenius_norm());
}

}  // namespace einalg
