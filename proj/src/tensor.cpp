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

#include "witnesskit/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "witnesskit/errors.hpp"
#include "witnesskit/kernels.hpp"

namespace witnesskit {
namespace {

constexpr double kHermitianTol = 1e-10;

double offdiag_frobenius(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  double sum = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c) continue;
      sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

// One Givens-style rotation in the (p, q) plane, chosen to zero a[p][q].
// Updates the work matrix in place (kept Hermitian) and accumulates the
// rotation into the eigenvector matrix v.
void rotate_pair(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * r);
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    const Complex nip = c * aip - s * std::conj(phase) * aiq;
    const Complex niq = s * phase * aip + c * aiq;
    a(i, p) = nip;
    a(p, i) = std::conj(nip);
    a(i, q) = niq;
    a(q, i) = std::conj(niq);
  }
  a(p, p) = Complex(c * c * app - 2.0 * c * s * r + s * s * aqq, 0.0);
  a(q, q) = Complex(s * s * app + 2.0 * c * s * r + c * c * aqq, 0.0);
  a(p, q) = Complex(0.0, 0.0);
  a(q, p) = Complex(0.0, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = c * vip - s * std::conj(phase) * viq;
    v(i, q) = s * phase * vip + c * viq;
  }
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) { return kernels::kron(a, b); }

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) { return kernels::kron(a, b); }

ComplexVector kron_all(std::span<const ComplexVector> factors) {
  if (factors.empty()) throw DimensionMismatch("kron_all: empty factor list");
  ComplexVector out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = kernels::kron(out, factors[i]);
  return out;
}

ComplexVector EigenSystem::eigenvector(std::size_t k) const {
  const std::size_t n = eigenvectors.rows();
  ComplexVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = eigenvectors(i, k);
  return v;
}

EigenSystem hermitian_eig(const ComplexMatrix& h, std::size_t max_sweeps) {
  if (h.rows() != h.cols())
    throw DimensionMismatch("hermitian_eig: matrix is " + std::to_string(h.rows()) + "x" +
                            std::to_string(h.cols()));
  const double defect = h.hermiticity_defect();
  if (defect > kHermitianTol)
    throw NotHermitian("hermitian_eig: max |H - H^dagger| = " + std::to_string(defect));

  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  // Project out roundoff-level asymmetry so the sweep invariant (a stays
  // Hermitian) holds from the start.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = Complex(a(r, r).real(), 0.0);
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex sym = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = sym;
      a(c, r) = std::conj(sym);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = 1e-12 * std::max(1.0, h.frobenius_norm());
  for (std::size_t sweep = 0;; ++sweep) {
    if (offdiag_frobenius(a) <= threshold) break;
    if (sweep >= max_sweeps)
      throw NoConvergence("hermitian_eig: off-diagonal norm still " +
                          std::to_string(offdiag_frobenius(a)) + " after " +
                          std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate_pair(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix contract_all_but_one(const ComplexMatrix& p, std::span<const ComplexVector> locals,
                                   std::size_t subsystem, std::span<const std::size_t> dims) {
  if (dims.empty()) throw DimensionMismatch("contract_all_but_one: empty dims");
  if (locals.size() != dims.size())
    throw DimensionMismatch("contract_all_but_one: " + std::to_string(locals.size()) +
                            " local vectors for " + std::to_string(dims.size()) + " subsystems");
  if (subsystem >= dims.size())
    throw DimensionMismatch("contract_all_but_one: subsystem index " + std::to_string(subsystem) +
                            " out of range");
  std::size_t joint = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (locals[i].dim() != dims[i])
      throw DimensionMismatch("contract_all_but_one: local vector " + std::to_string(i) + " has dim " +
                              std::to_string(locals[i].dim()) + ", expected " +
                              std::to_string(dims[i]));
    joint *= dims[i];
  }
  if (p.rows() != p.cols() || p.rows() != joint)
    throw DimensionMismatch("contract_all_but_one: operator is " + std::to_string(p.rows()) + "x" +
                            std::to_string(p.cols()) + ", joint dim is " + std::to_string(joint));

  kernels::ContractGeometry geom;
  geom.subsystem_dim = dims[subsystem];
  geom.stride = 1;
  for (std::size_t i = subsystem + 1; i < dims.size(); ++i) geom.stride *= dims[i];
  geom.reduced_dim = joint / dims[subsystem];

  ComplexVector reduced(1);
  reduced[0] = Complex(1.0, 0.0);
  bool seeded = false;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i == subsystem) continue;
    if (!seeded) {
      reduced = locals[i];
      seeded = true;
    } else {
      reduced = kernels::kron(reduced, locals[i]);
    }
  }
  return kernels::contract(p, reduced, geom);
}

Complex expectation(const ComplexMatrix& p, const ComplexVector& state) {
  return kernels::expectation(p, state);
}

Complex expectation_density(const ComplexMatrix& p, const ComplexMatrix& rho) {
  return kernels::trace_product(p, rho);
}

}  // namespace witnesskit
