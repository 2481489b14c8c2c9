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

#ifndef WITNESSKIT_TENSOR_HPP_
#define WITNESSKIT_TENSOR_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "witnesskit/complex_types.hpp"

namespace witnesskit {

/// Tensor (Kronecker) product under row-major index fusion: entry
/// ((i1,i2),(j1,j2)) = A[i1,j1] * B[i2,j2].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Kronecker product of a sequence of vectors, left to right.
ComplexVector kron_all(std::span<const ComplexVector> factors);

struct EigenSystem {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // k-th column pairs with eigenvalues[k]
  ComplexVector eigenvector(std::size_t k) const;
};

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Stops when the off-diagonal Frobenius norm falls below
/// 1e-12 * max(1, ||H||_F); throws NoConvergence past the sweep budget and
/// NotHermitian when max |H - H^dagger| exceeds 1e-10.
EigenSystem hermitian_eig(const ComplexMatrix& h, std::size_t max_sweeps = 100);

/// Effective single-subsystem operator: fixes every local vector except the
/// one at `subsystem` (0-based) and returns the dims[subsystem]-square matrix
/// M[k][l] = < (x) v_i, k | P | (x) v_i, l >. Hermitian whenever P is.
ComplexMatrix contract_all_but_one(const ComplexMatrix& p, std::span<const ComplexVector> locals,
                                   std::size_t subsystem, std::span<const std::size_t> dims);

/// <v|P|v> for a pure state vector.
Complex expectation(const ComplexMatrix& p, const ComplexVector& state);

/// Tr(P * rho) for a density matrix given as a raw square matrix.
Complex expectation_density(const ComplexMatrix& p, const ComplexMatrix& rho);

}  // namespace witnesskit

#endif  // WITNESSKIT_TENSOR_HPP_
