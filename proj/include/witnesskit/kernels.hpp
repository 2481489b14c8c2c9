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

#ifndef WITNESSKIT_KERNELS_HPP_
#define WITNESSKIT_KERNELS_HPP_

#include <cstddef>

#include "witnesskit/complex_types.hpp"

// Data-parallel primitives behind the tensor module. Every kernel exists
// twice: a serial reference under kernels::serial and an OpenMP version under
// kernels::par. Both compute each output element (or ordered partial) with the
// same loop order, so their results are bitwise identical; the parity tests
// and the benchmark tool rely on that. The unqualified functions dispatch by
// problem size and thread budget.
namespace witnesskit::kernels {

/// Geometry of a contract-all-but-one call: subsystem j of a joint space laid
/// out row-major. reduced_dim is the joint dimension divided by subsystem_dim;
/// stride is the product of the dimensions after j.
struct ContractGeometry {
  std::size_t subsystem_dim = 0;
  std::size_t stride = 0;
  std::size_t reduced_dim = 0;
};

namespace serial {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);
ComplexMatrix outer(const ComplexVector& v);
Complex expectation(const ComplexMatrix& p, const ComplexVector& v);
Complex trace_product(const ComplexMatrix& p, const ComplexMatrix& rho);

/// Effective subsystem_dim x subsystem_dim matrix of p against the fixed
/// reduced weight vector (the Kronecker product of the other local vectors):
/// out[k][l] = sum_{x,y} conj(w[x]) w[y] p[embed(x,k)][embed(y,l)].
ComplexMatrix contract(const ComplexMatrix& p, const ComplexVector& reduced_weights,
                       const ContractGeometry& g);

}  // namespace serial

namespace par {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);
ComplexMatrix outer(const ComplexVector& v);
Complex expectation(const ComplexMatrix& p, const ComplexVector& v);
Complex trace_product(const ComplexMatrix& p, const ComplexMatrix& rho);
ComplexMatrix contract(const ComplexMatrix& p, const ComplexVector& reduced_weights,
                       const ContractGeometry& g);

}  // namespace par

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);
ComplexMatrix outer(const ComplexVector& v);
Complex expectation(const ComplexMatrix& p, const ComplexVector& v);
Complex trace_product(const ComplexMatrix& p, const ComplexMatrix& rho);
ComplexMatrix contract(const ComplexMatrix& p, const ComplexVector& reduced_weights,
                       const ContractGeometry& g);

}  // namespace witnesskit::kernels

#endif  // WITNESSKIT_KERNELS_HPP_
