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

#include "witnesskit/states.hpp"

#include <cmath>
#include <random>
#include <string>

#include "witnesskit/errors.hpp"
#include "witnesskit/kernels.hpp"
#include "witnesskit/tensor.hpp"

namespace witnesskit {
namespace {

constexpr double kNormTol = 1e-8;

ComplexVector sample_local(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v[i] = Complex(re, im);
  }
  v.normalize();
  return v;
}

}  // namespace

SystemShape::SystemShape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DimensionMismatch("SystemShape: need at least one subsystem");
  for (std::size_t j = 0; j < dims_.size(); ++j) {
    if (dims_[j] < 2)
      throw DimensionMismatch("SystemShape: subsystem " + std::to_string(j) + " has dim " +
                              std::to_string(dims_[j]) + ", need >= 2");
    joint_ *= dims_[j];
  }
}

SystemShape SystemShape::qubits(std::size_t m) {
  return SystemShape(std::vector<std::size_t>(m, 2));
}

bool SystemShape::all_qubits() const {
  for (std::size_t d : dims_)
    if (d != 2) return false;
  return true;
}

PureState::PureState(SystemShape shape_in, ComplexVector amplitudes_in)
    : shape(std::move(shape_in)), amplitudes(std::move(amplitudes_in)) {
  if (amplitudes.dim() != shape.joint_dim())
    throw DimensionMismatch("PureState: " + std::to_string(amplitudes.dim()) +
                            " amplitudes for joint dim " + std::to_string(shape.joint_dim()));
  const double n2 = amplitudes.norm_squared();
  if (std::abs(n2 - 1.0) > kNormTol)
    throw ValidationError("PureState: squared norm is " + std::to_string(n2));
}

DensityOperator::DensityOperator(SystemShape shape_in, ComplexMatrix matrix_in)
    : shape(std::move(shape_in)), matrix(std::move(matrix_in)) {
  if (matrix.rows() != shape.joint_dim() || matrix.cols() != shape.joint_dim())
    throw DimensionMismatch("DensityOperator: matrix is " + std::to_string(matrix.rows()) + "x" +
                            std::to_string(matrix.cols()) + " for joint dim " +
                            std::to_string(shape.joint_dim()));
  if (matrix.hermiticity_defect() > kNormTol)
    throw NotHermitian("DensityOperator: max |rho - rho^dagger| = " +
                       std::to_string(matrix.hermiticity_defect()));
  if (std::abs(matrix.trace() - Complex(1.0, 0.0)) > kNormTol)
    throw ValidationError("DensityOperator: trace is not 1");
}

std::size_t flat_index_from_labels(const SystemShape& shape, std::span<const std::size_t> labels) {
  if (labels.size() != shape.subsystem_count())
    throw DimensionMismatch("flat_index_from_labels: " + std::to_string(labels.size()) +
                            " labels for " + std::to_string(shape.subsystem_count()) +
                            " subsystems");
  std::size_t flat = 0;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    if (labels[j] < 1 || labels[j] > shape.dim(j))
      throw LabelOutOfRange("flat_index_from_labels: label " + std::to_string(labels[j]) +
                            " at position " + std::to_string(j) + " exceeds dim " +
                            std::to_string(shape.dim(j)));
    flat = flat * shape.dim(j) + (labels[j] - 1);
  }
  return flat;
}

std::vector<std::size_t> labels_from_flat(const SystemShape& shape, std::size_t flat) {
  if (flat >= shape.joint_dim())
    throw LabelOutOfRange("labels_from_flat: offset " + std::to_string(flat) +
                          " exceeds joint dim " + std::to_string(shape.joint_dim()));
  const std::size_t m = shape.subsystem_count();
  std::vector<std::size_t> labels(m);
  for (std::size_t j = m; j-- > 0;) {
    labels[j] = flat % shape.dim(j) + 1;
    flat /= shape.dim(j);
  }
  return labels;
}

PureState ghz_state(std::size_t m) {
  if (m < 2) throw BadArity("ghz_state: need m >= 2, got " + std::to_string(m));
  SystemShape shape = SystemShape::qubits(m);
  ComplexVector amps(shape.joint_dim());
  const double a = 1.0 / std::sqrt(2.0);
  amps[0] = Complex(a, 0.0);
  amps[shape.joint_dim() - 1] = Complex(a, 0.0);
  return PureState(std::move(shape), std::move(amps));
}

PureState w_state(std::size_t m) {
  if (m < 2) throw BadArity("w_state: need m >= 2, got " + std::to_string(m));
  SystemShape shape = SystemShape::qubits(m);
  ComplexVector amps(shape.joint_dim());
  const double a = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::size_t j = 0; j < m; ++j) {
    // Label tuple with the single 2 at position j; row-major offset 2^(m-1-j).
    amps[std::size_t{1} << (m - 1 - j)] = Complex(a, 0.0);
  }
  return PureState(std::move(shape), std::move(amps));
}

DensityOperator pure_to_density(const PureState& psi) {
  return DensityOperator(psi.shape, kernels::outer(psi.amplitudes));
}

DensityOperator white_noise_mix(const PureState& psi, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw BadProbability("white_noise_mix: p = " + std::to_string(p));
  const std::size_t d = psi.shape.joint_dim();
  ComplexMatrix rho = kernels::outer(psi.amplitudes);
  rho *= Complex(p, 0.0);
  const double background = (1.0 - p) / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) rho(i, i) += background;
  return DensityOperator(psi.shape, std::move(rho));
}

std::vector<ComplexVector> random_product_locals(const SystemShape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ComplexVector> locals;
  locals.reserve(shape.subsystem_count());
  for (std::size_t j = 0; j < shape.subsystem_count(); ++j)
    locals.push_back(sample_local(shape.dim(j), rng));
  return locals;
}

PureState random_product_state(const SystemShape& shape, std::uint64_t seed) {
  const std::vector<ComplexVector> locals = random_product_locals(shape, seed);
  return PureState(shape, kron_all(locals));
}

DensityOperator random_separable_mixture(const SystemShape& shape, std::size_t components,
                                         std::uint64_t seed) {
  if (components == 0) throw BadArity("random_separable_mixture: need at least one component");
  std::mt19937_64 rng(seed);
  // Dirichlet(1,...,1) weights via normalized unit-rate exponentials.
  std::exponential_distribution<double> exp_draw(1.0);
  std::vector<double> weights(components);
  double total = 0.0;
  for (double& w : weights) {
    w = exp_draw(rng);
    total += w;
  }
  const std::size_t d = shape.joint_dim();
  ComplexMatrix rho(d, d);
  std::uniform_int_distribution<std::uint64_t> subseed;
  for (std::size_t k = 0; k < components; ++k) {
    const PureState product = random_product_state(shape, subseed(rng));
    ComplexMatrix term = kernels::outer(product.amplitudes);
    term *= Complex(weights[k] / total, 0.0);
    rho += term;
  }
  return DensityOperator(shape, std::move(rho));
}

}  // namespace witnesskit
