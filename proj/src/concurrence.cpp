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

#include "witnesskit/concurrence.hpp"

#include <cmath>
#include <string>

#include "witnesskit/errors.hpp"

namespace witnesskit {
namespace {

void require_qubits(const PureState& psi, const char* where) {
  if (!psi.shape.all_qubits())
    throw WrongShape(std::string(where) + ": qubit shapes only");
}

// Flat offset of the m-qubit label tuple that is `context` with labels k at
// position r1 and l at position r2 (all 1-based).
std::size_t splice_index(std::size_t m, std::size_t r1, std::size_t r2, std::size_t k,
                         std::size_t l, const std::vector<std::size_t>& context) {
  std::size_t flat = 0;
  std::size_t next_context = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    std::size_t label;
    if (j == r1)
      label = k;
    else if (j == r2)
      label = l;
    else
      label = context[next_context++];
    flat = flat * 2 + (label - 1);
  }
  return flat;
}

double doubled_minor(const ComplexVector& a, std::size_t i11, std::size_t i22, std::size_t i12,
                     std::size_t i21) {
  return 2.0 * std::norm(a[i11] * a[i22] - a[i12] * a[i21]);
}

}  // namespace

ConcurrenceBreakdown three_qubit_concurrence(const PureState& psi) {
  require_qubits(psi, "three_qubit_concurrence");
  if (psi.shape.subsystem_count() != 3)
    throw WrongShape("three_qubit_concurrence: need exactly 3 qubits, got " +
                     std::to_string(psi.shape.subsystem_count()));
  const ComplexVector& a = psi.amplitudes;

  ConcurrenceBreakdown out;
  // Pairwise minors, one qubit's label held fixed. Flat offsets follow the
  // row-major label order: a[(l1-1)*4 + (l2-1)*2 + (l3-1)].
  out.w_terms[{1, 2, {1}}] = doubled_minor(a, 0, 6, 2, 4);  // a111 a221 - a121 a211
  out.w_terms[{1, 2, {2}}] = doubled_minor(a, 1, 7, 3, 5);  // a112 a222 - a122 a212
  out.w_terms[{1, 3, {1}}] = doubled_minor(a, 0, 5, 1, 4);  // a111 a212 - a112 a211
  out.w_terms[{1, 3, {2}}] = doubled_minor(a, 2, 7, 3, 6);  // a121 a222 - a122 a221
  out.w_terms[{2, 3, {1}}] = doubled_minor(a, 0, 3, 1, 2);  // a111 a122 - a112 a121
  out.w_terms[{2, 3, {2}}] = doubled_minor(a, 4, 7, 5, 6);  // a211 a222 - a212 a221

  // Differences among the four complementary products.
  const Complex p[4] = {a[0] * a[7], a[1] * a[6], a[2] * a[5], a[3] * a[4]};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = x + 1; y < 4; ++y)
      out.ghz_terms[{x, y}] = std::norm(p[x] - p[y]);

  out.normalization = 1.0;
  double sum = 0.0;
  for (const auto& [key, value] : out.w_terms) sum += value;
  for (const auto& [key, value] : out.ghz_terms) sum += value;
  out.total_squared = sum;
  out.total = std::sqrt(sum);
  return out;
}

double w_class_terms(const PureState& psi, std::size_t r1, std::size_t r2) {
  require_qubits(psi, "w_class_terms");
  const std::size_t m = psi.shape.subsystem_count();
  if (r1 < 1 || r2 <= r1 || r2 > m)
    throw BadPositions("w_class_terms: positions (" + std::to_string(r1) + "," +
                       std::to_string(r2) + ") must satisfy 1 <= r1 < r2 <= " + std::to_string(m));
  const ComplexVector& a = psi.amplitudes;

  double sum = 0.0;
  const std::size_t contexts = std::size_t{1} << (m - 2);
  std::vector<std::size_t> context(m - 2);
  for (std::size_t c = 0; c < contexts; ++c) {
    for (std::size_t j = 0; j < m - 2; ++j)
      context[j] = ((c >> (m - 3 - j)) & 1) + 1;
    const std::size_t i11 = splice_index(m, r1, r2, 1, 1, context);
    const std::size_t i22 = splice_index(m, r1, r2, 2, 2, context);
    const std::size_t i12 = splice_index(m, r1, r2, 1, 2, context);
    const std::size_t i21 = splice_index(m, r1, r2, 2, 1, context);
    sum += doubled_minor(a, i11, i22, i12, i21);
  }
  return sum;
}

double ghz_class_terms(const PureState& psi) {
  require_qubits(psi, "ghz_class_terms");
  const std::size_t m = psi.shape.subsystem_count();
  if (m < 2) throw WrongShape("ghz_class_terms: need m >= 2");
  const ComplexVector& a = psi.amplitudes;
  const std::size_t d = psi.shape.joint_dim();

  // Representatives of complementary label pairs: flat x with x < xbar,
  // i.e. first qubit label 1.
  const std::size_t reps = d / 2;
  std::vector<Complex> products(reps);
  for (std::size_t x = 0; x < reps; ++x) products[x] = a[x] * a[d - 1 - x];

  double sum = 0.0;
  for (std::size_t x = 0; x < reps; ++x)
    for (std::size_t y = x + 1; y < reps; ++y) sum += std::norm(products[x] - products[y]);
  return sum;
}

ConcurrenceBreakdown concurrence_general(const PureState& psi, double normalization) {
  require_qubits(psi, "concurrence_general");
  const std::size_t m = psi.shape.subsystem_count();
  if (m < 2) throw WrongShape("concurrence_general: need m >= 2");
  if (!(normalization > 0.0))
    throw ValidationError("concurrence_general: normalization must be positive");
  const ComplexVector& a = psi.amplitudes;

  ConcurrenceBreakdown out;
  out.normalization = normalization;

  for (std::size_t r1 = 1; r1 < m; ++r1) {
    for (std::size_t r2 = r1 + 1; r2 <= m; ++r2) {
      const std::size_t contexts = std::size_t{1} << (m - 2);
      std::vector<std::size_t> context(m - 2);
      for (std::size_t c = 0; c < contexts; ++c) {
        for (std::size_t j = 0; j < m - 2; ++j)
          context[j] = ((c >> (m - 3 - j)) & 1) + 1;
        const std::size_t i11 = splice_index(m, r1, r2, 1, 1, context);
        const std::size_t i22 = splice_index(m, r1, r2, 2, 2, context);
        const std::size_t i12 = splice_index(m, r1, r2, 1, 2, context);
        const std::size_t i21 = splice_index(m, r1, r2, 2, 1, context);
        out.w_terms[{r1, r2, context}] = doubled_minor(a, i11, i22, i12, i21);
      }
    }
  }

  const std::size_t d = psi.shape.joint_dim();
  const std::size_t reps = d / 2;
  std::vector<Complex> products(reps);
  for (std::size_t x = 0; x < reps; ++x) products[x] = a[x] * a[d - 1 - x];
  for (std::size_t x = 0; x < reps; ++x)
    for (std::size_t y = x + 1; y < reps; ++y)
      out.ghz_terms[{x, y}] = std::norm(products[x] - products[y]);

  double sum = 0.0;
  for (const auto& [key, value] : out.w_terms) sum += value;
  for (const auto& [key, value] : out.ghz_terms) sum += value;
  out.total_squared = normalization * sum;
  out.total = std::sqrt(out.total_squared);
  return out;
}

double concurrence_squared(const PureState& psi) {
  return concurrence_general(psi).total_squared;
}

}  // namespace witnesskit
