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

#ifndef WITNESSKIT_COMPLEX_TYPES_HPP_
#define WITNESSKIT_COMPLEX_TYPES_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace witnesskit {

using Complex = std::complex<double>;

/// Dense complex vector. Plain value type, no implicit normalization.
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim) : entries_(dim, Complex(0.0, 0.0)) {}
  ComplexVector(std::initializer_list<Complex> init) : entries_(init) {}

  static ComplexVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  std::span<const Complex> entries() const { return entries_; }
  Complex* data() { return entries_.data(); }
  const Complex* data() const { return entries_.data(); }

  double norm_squared() const;
  double norm() const;

  /// In-place rescale to unit norm. Throws ValidationError on the zero vector.
  void normalize();

  /// Inner product, conjugate-linear in *this: sum conj(this[i]) * other[i].
  Complex dot(const ComplexVector& other) const;

  bool operator==(const ComplexVector& other) const = default;

 private:
  std::vector<Complex> entries_;
};

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }
  Complex* data() { return entries_.data(); }
  const Complex* data() const { return entries_.data(); }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// Largest entrywise |a_ij|.
  double max_abs() const;
  double frobenius_norm() const;

  /// max |A - A^dagger| over all entries <= tol.
  bool is_hermitian(double tol) const;
  double hermiticity_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

}  // namespace witnesskit

#endif  // WITNESSKIT_COMPLEX_TYPES_HPP_
