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

#ifndef WITNESSKIT_STATES_HPP_
#define WITNESSKIT_STATES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "witnesskit/complex_types.hpp"

namespace witnesskit {

/// Shape of a composite system: one dimension N_j >= 2 per subsystem.
class SystemShape {
 public:
  explicit SystemShape(std::vector<std::size_t> dims);
  static SystemShape qubits(std::size_t m);

  std::size_t subsystem_count() const { return dims_.size(); }
  std::size_t dim(std::size_t j) const { return dims_.at(j); }
  std::size_t joint_dim() const { return joint_; }
  std::span<const std::size_t> dims() const { return dims_; }
  bool all_qubits() const;

  friend bool operator==(const SystemShape& a, const SystemShape& b) { return a.dims_ == b.dims_; }

 private:
  std::vector<std::size_t> dims_;
  std::size_t joint_ = 1;
};

/// Normalized joint state vector over a SystemShape. Amplitude order is the
/// row-major fusion of per-subsystem labels.
struct PureState {
  PureState(SystemShape shape, ComplexVector amplitudes);
  SystemShape shape;
  ComplexVector amplitudes;
};

/// Hermitian, unit-trace operator over a SystemShape.
struct DensityOperator {
  DensityOperator(SystemShape shape, ComplexMatrix matrix);
  SystemShape shape;
  ComplexMatrix matrix;
};

/// Row-major fusion of 1-based labels (l_1,...,l_m) into a flat offset in
/// 0..joint_dim-1, and its inverse. Labels use the basis convention {1..N_j}.
std::size_t flat_index_from_labels(const SystemShape& shape, std::span<const std::size_t> labels);
std::vector<std::size_t> labels_from_flat(const SystemShape& shape, std::size_t flat);

/// 1/sqrt(2) (|1...1> + |2...2>) on m qubits.
PureState ghz_state(std::size_t m);

/// Symmetric superposition of the m basis states with exactly one label 2,
/// each with amplitude 1/sqrt(m).
PureState w_state(std::size_t m);

DensityOperator pure_to_density(const PureState& psi);

/// rho(p) = p |psi><psi| + (1-p) I/d.
DensityOperator white_noise_mix(const PureState& psi, double p);

/// Independently Haar-random local vectors (normalized complex Gaussians),
/// one per subsystem. Deterministic given seed.
std::vector<ComplexVector> random_product_locals(const SystemShape& shape, std::uint64_t seed);

/// Tensor product of random_product_locals(shape, seed).
PureState random_product_state(const SystemShape& shape, std::uint64_t seed);

/// Convex mixture of `components` random product states with Dirichlet-uniform
/// weights. Deterministic given seed.
DensityOperator random_separable_mixture(const SystemShape& shape, std::size_t components,
                                         std::uint64_t seed);

}  // namespace witnesskit

#endif  // WITNESSKIT_STATES_HPP_
