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

#ifndef WITNESSKIT_TESTS_TEST_SUPPORT_HPP_
#define WITNESSKIT_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <cstdint>
#include <random>

#include "witnesskit/complex_types.hpp"
#include "witnesskit/states.hpp"

namespace witnesskit::testing {

inline ComplexMatrix sigma_x() {
  ComplexMatrix m(2, 2);
  m(0, 1) = Complex(1.0, 0.0);
  m(1, 0) = Complex(1.0, 0.0);
  return m;
}

inline ComplexMatrix sigma_y() {
  ComplexMatrix m(2, 2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

inline ComplexMatrix sigma_z() {
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(1.0, 0.0);
  m(1, 1) = Complex(-1.0, 0.0);
  return m;
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  ComplexMatrix a = random_matrix(n, n, seed);
  ComplexMatrix h = a.adjoint();
  h += a;
  h *= Complex(0.5, 0.0);
  return h;
}

inline ComplexVector random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v;
}

/// Haar-random joint state over the given shape (not a product state).
inline PureState random_state(const SystemShape& shape, std::uint64_t seed) {
  ComplexVector v = random_vector(shape.joint_dim(), seed);
  v.normalize();
  return PureState(shape, std::move(v));
}

/// Matrix of random dyadic rationals k/16 with k in [-8, 8]. Products and
/// sums of a few such values stay exact in binary floating point, which makes
/// bitwise associativity checks meaningful.
inline ComplexMatrix random_dyadic_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> digit(-8, 8);
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = Complex(digit(rng) / 16.0, digit(rng) / 16.0);
  return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

}  // namespace witnesskit::testing

#endif  // WITNESSKIT_TESTS_TEST_SUPPORT_HPP_
