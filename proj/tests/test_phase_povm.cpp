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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "test_support.hpp"
#include "witnesskit/errors.hpp"
#include "witnesskit/phase_povm.hpp"
#include "witnesskit/states.hpp"
#include "witnesskit/tensor.hpp"

using namespace witnesskit;
using namespace witnesskit::testing;

namespace {

const Complex kOne(1.0, 0.0);
const Complex kI(0.0, 1.0);

ComplexMatrix kron_chain(const std::vector<ComplexMatrix>& factors) {
  ComplexMatrix acc = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) acc = kron(acc, factors[k]);
  return acc;
}

}  // namespace

TEST_CASE("delta at exact quarter turns") {
  const ComplexMatrix quarter = delta({2, M_PI_2});
  CHECK(quarter(0, 0) == kOne);
  CHECK(quarter(0, 1) == kI);
  CHECK(quarter(1, 0) == -kI);
  CHECK(quarter(1, 1) == kOne);

  const ComplexMatrix half = delta({2, M_PI});
  CHECK(half(0, 1) == -kOne);
  CHECK(half(1, 0) == -kOne);

  const ComplexMatrix qutrit = delta({3, M_PI_2});
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t l = 0; l < 3; ++l) {
      const Complex expected = (k == l) ? kOne : (k < l ? kI : -kI);
      CHECK(qutrit(k, l) == expected);
    }
}

TEST_CASE("delta_tilde special values on a qubit") {
  CHECK(delta_tilde({2, M_PI}) == sigma_x());

  const ComplexMatrix at_quarter = delta_tilde({2, M_PI_2});
  CHECK(at_quarter(0, 0) == Complex(0.0, 0.0));
  CHECK(at_quarter(0, 1) == -kI);
  CHECK(at_quarter(1, 0) == kI);
  CHECK(at_quarter(1, 1) == Complex(0.0, 0.0));

  const ComplexMatrix at_zero = delta_tilde({2, 0.0});
  CHECK(at_zero(0, 1) == -kOne);
  CHECK(at_zero(1, 0) == -kOne);
}

TEST_CASE("delta and delta_tilde sum to the identity bitwise") {
  for (double phi : {0.0, 0.3, M_PI_2, 1.7, M_PI}) {
    for (std::size_t n : {2u, 3u, 5u}) {
      const ComplexMatrix d = delta({n, phi});
      const ComplexMatrix dt = delta_tilde({n, phi});
      CHECK(d + dt == ComplexMatrix::identity(n));
    }
  }
}

TEST_CASE("delta is Hermitian with unit diagonal for generic phases") {
  const ComplexMatrix d = delta({4, 0.83});
  CHECK(d.is_hermitian(0.0));
  for (std::size_t k = 0; k < 4; ++k) CHECK(d(k, k) == kOne);
  CHECK(std::abs(d(0, 1) - Complex(std::cos(0.83), std::sin(0.83))) < 1e-15);
}

TEST_CASE("w_class_operator on three qubits is sigma_y x sigma_y x I") {
  const SignedOperator op = w_class_operator(SystemShape::qubits(3), 1, 2);
  const ComplexMatrix expected = kron_chain({sigma_y(), sigma_y(), ComplexMatrix::identity(2)});
  CHECK(op.matrix == expected);
  CHECK(op.matrix(0, 6) == -kOne);
  CHECK(op.matrix.is_hermitian(0.0));
  CHECK(op.matrix.trace() == Complex(0.0, 0.0));

  const SignVector& sig = op.signature.at({0, 6});
  REQUIRE(sig.size() == 3);
  CHECK(sig[0] == 1);
  CHECK(sig[1] == 1);
  CHECK(sig[2] == 0);
}

TEST_CASE("ghz_class_operator on three qubits is sigma_y x sigma_y x sigma_x") {
  const SignedOperator op = ghz_class_operator(SystemShape::qubits(3), 1, 2);
  CHECK(op.matrix == kron_chain({sigma_y(), sigma_y(), sigma_x()}));
  CHECK(op.matrix(0, 7) == -kOne);
  CHECK(op.matrix.is_hermitian(0.0));

  const SignVector& sig = op.signature.at({0, 7});
  REQUIRE(sig.size() == 3);
  CHECK(sig[0] == 1);
  CHECK(sig[1] == 1);
  CHECK(sig[2] == 1);
}

TEST_CASE("two-qubit class operators coincide") {
  const SystemShape pair = SystemShape::qubits(2);
  const ComplexMatrix yy = kron(sigma_y(), sigma_y());
  CHECK(w_class_operator(pair, 1, 2).matrix == yy);
  CHECK(ghz_class_operator(pair, 1, 2).matrix == yy);
}

TEST_CASE("w_class_operator matches the embedded sigma_y pair for every position") {
  for (std::size_t m = 3; m <= 6; ++m) {
    const SystemShape shape = SystemShape::qubits(m);
    for (std::size_t r1 = 1; r1 < m; ++r1)
      for (std::size_t r2 = r1 + 1; r2 <= m; ++r2) {
        std::vector<ComplexMatrix> factors(m, ComplexMatrix::identity(2));
        factors[r1 - 1] = sigma_y();
        factors[r2 - 1] = sigma_y();
        CAPTURE(m);
        CAPTURE(r1);
        CAPTURE(r2);
        CHECK(w_class_operator(shape, r1, r2).matrix == kron_chain(factors));
      }
  }
}

TEST_CASE("signature map is entrywise antisymmetric") {
  const SignedOperator op = ghz_class_operator(SystemShape::qubits(3), 2, 3);
  for (const auto& [key, sig] : op.signature) {
    const SignVector& mirrored = op.signature.at({key.second, key.first});
    REQUIRE(mirrored.size() == sig.size());
    for (std::size_t j = 0; j < sig.size(); ++j) CHECK(mirrored[j] == -sig[j]);
  }
}

TEST_CASE("class operators on qutrits") {
  const SystemShape pair({3, 3});
  const SignedOperator op = w_class_operator(pair, 1, 2);
  CHECK(op.matrix == kron(delta_tilde({3, M_PI_2}), delta_tilde({3, M_PI_2})));
  // Labels (1,1) -> (2,2): product of two upper-triangle entries (-i)(-i).
  CHECK(op.matrix(0, 4) == -kOne);
  const SignVector& sig = op.signature.at({0, 4});
  CHECK(sig[0] == 1);
  CHECK(sig[1] == 1);

  const SignedOperator ghz = ghz_class_operator(SystemShape({3, 3, 3}), 1, 2);
  CHECK(ghz.matrix ==
        kron(kron(delta_tilde({3, M_PI_2}), delta_tilde({3, M_PI_2})), delta_tilde({3, M_PI})));
}

TEST_CASE("class operator positions are validated") {
  const SystemShape shape = SystemShape::qubits(3);
  CHECK_THROWS_AS(w_class_operator(shape, 0, 2), BadPositions);
  CHECK_THROWS_AS(w_class_operator(shape, 2, 2), BadPositions);
  CHECK_THROWS_AS(w_class_operator(shape, 2, 1), BadPositions);
  CHECK_THROWS_AS(ghz_class_operator(shape, 1, 4), BadPositions);
}

TEST_CASE("triangular_split partitions and reassembles") {
  const ComplexMatrix a = random_matrix(5, 5, 61);
  const TriangularParts parts = triangular_split(a);
  ComplexMatrix diag(5, 5);
  for (std::size_t k = 0; k < 5; ++k) diag(k, k) = a(k, k);
  CHECK(parts.upper + parts.lower + diag == a);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) {
      if (r >= c) CHECK(parts.upper(r, c) == Complex(0.0, 0.0));
      if (r <= c) CHECK(parts.lower(r, c) == Complex(0.0, 0.0));
    }

  const ComplexMatrix h = random_hermitian(5, 62);
  const TriangularParts hp = triangular_split(h);
  CHECK(max_abs_diff(hp.lower, hp.upper.adjoint()) < 1e-15);
}

TEST_CASE("triangular_split of a w_class_operator") {
  const SignedOperator op = w_class_operator(SystemShape::qubits(2), 1, 2);
  const TriangularParts parts = triangular_split(op);
  CHECK(parts.upper(0, 3) == -kOne);
  CHECK(parts.upper(1, 2) == kOne);
  CHECK(parts.upper(3, 0) == Complex(0.0, 0.0));
  CHECK(parts.lower(3, 0) == -kOne);
  CHECK(parts.lower(2, 1) == kOne);
  CHECK(parts.upper + parts.lower == op.matrix);
}

TEST_CASE("sign_restrict keeps only sign-uniform entries") {
  const SystemShape shape = SystemShape::qubits(3);

  const ComplexMatrix ghz = sign_restrict(ghz_class_operator(shape, 1, 2));
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      const bool corner = (r == 0 && c == 7) || (r == 7 && c == 0);
      CHECK(ghz(r, c) == (corner ? -kOne : Complex(0.0, 0.0)));
    }

  const ComplexMatrix w = sign_restrict(w_class_operator(shape, 1, 2));
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) {
      const bool kept = (r == 0 && c == 6) || (r == 1 && c == 7) || (r == 6 && c == 0) ||
                        (r == 7 && c == 1);
      CHECK(w(r, c) == (kept ? -kOne : Complex(0.0, 0.0)));
    }
}

TEST_CASE("sign_restrict never invents entries") {
  const SignedOperator op = ghz_class_operator(SystemShape::qubits(4), 2, 3);
  const ComplexMatrix restricted = sign_restrict(op);
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c) {
      if (restricted(r, c) != Complex(0.0, 0.0)) CHECK(restricted(r, c) == op.matrix(r, c));
    }
}
