// Copyright 2026 The witnesskit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "witnesskit/complex_types.hpp"

#include <cmath>

#include "witnesskit/errors.hpp"

namespace witnesskit {

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t index) {
  ComplexVector v(dim);
  v[index] = Complex(1.0, 0.0);
  return v;
}

double ComplexVector::norm_squared() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return s;
}

double ComplexVector::norm() const { return std::sqrt(norm_squared()); }

void ComplexVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw ValidationError("cannot normalize the zero vector");
  for (Complex& z : entries_) z /= n;
}

Complex ComplexVector::dot(const ComplexVector& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("dot: vector dimensions differ");
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < entries_.size(); ++i) s += std::conj(entries_[i]) * other[i];
  return s;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = Complex(values[i], 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace: matrix is not square");
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  if (rows_ != cols_) throw DimensionMismatch("hermiticity_defect: matrix is not square");
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw DimensionMismatch("operator+=: matrix dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw DimensionMismatch("operator-=: matrix dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

}  // namespace witnesskit
