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

#ifndef WITNESSKIT_PHASE_POVM_HPP_
#define WITNESSKIT_PHASE_POVM_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "witnesskit/complex_types.hpp"
#include "witnesskit/states.hpp"

namespace witnesskit {

/// Uniform antisymmetric phase table on one subsystem: phi_{k,l} = +phi for
/// k < l, -phi for k > l, 0 on the diagonal.
struct PhaseAssignment {
  std::size_t dim;
  double phi;
};

/// Per-subsystem sign of a joint phase: +1 / -1 for an off-diagonal local
/// factor entry, 0 where the factor contributed a diagonal element.
using SignVector = std::vector<std::int8_t>;
using SignatureMap = std::map<std::pair<std::size_t, std::size_t>, SignVector>;

/// Dense operator on the joint space plus the symbolic sign bookkeeping for
/// each nonzero entry. signature[(y,x)] is the entrywise negation of
/// signature[(x,y)].
struct SignedOperator {
  SystemShape shape;
  ComplexMatrix matrix;
  SignatureMap signature;
};

/// Matrix with entry e^{i phi_{k,l}}; unit diagonal, Hermitian. Phases that
/// land on exact quarter turns produce exact entries from {1, i, -1, -i}.
ComplexMatrix delta(const PhaseAssignment& pa);

/// Orthogonal complement of delta: identity minus delta. Zero diagonal,
/// off-diagonal entry (k,l) = -e^{i phi_{k,l}}.
ComplexMatrix delta_tilde(const PhaseAssignment& pa);

/// Tensor operator with delta_tilde(pi/2) at 1-based positions r1 < r2 and
/// identity on every other subsystem.
SignedOperator w_class_operator(const SystemShape& shape, std::size_t r1, std::size_t r2);

/// Tensor operator with delta_tilde(pi/2) at 1-based positions r1 < r2 and
/// delta_tilde(pi) on every other subsystem.
SignedOperator ghz_class_operator(const SystemShape& shape, std::size_t r1, std::size_t r2);

struct TriangularParts {
  ComplexMatrix upper;  // entries with row < col
  ComplexMatrix lower;  // entries with row > col
};

/// Splits off the strict upper and lower triangles; upper + lower + diagonal
/// reassembles the input, and lower = adjoint(upper) for Hermitian input.
TriangularParts triangular_split(const ComplexMatrix& a);
TriangularParts triangular_split(const SignedOperator& a);

/// Keeps exactly the entries whose nonzero signature components are all +1 or
/// all -1; everything else (mixed signs, pure-diagonal signatures) is zeroed.
ComplexMatrix sign_restrict(const SignedOperator& a);

}  // namespace witnesskit

#endif  // WITNESSKIT_PHASE_POVM_HPP_
