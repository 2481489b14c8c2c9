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

#include "test_support.hpp"
#include "witnesskit/errors.hpp"
#include "witnesskit/kernels.hpp"
#include "witnesskit/threads.hpp"

using namespace witnesskit;
using namespace witnesskit::testing;

namespace {

// Restores the global thread override when a test scope ends.
struct ThreadGuard {
  explicit ThreadGuard(int threads) { set_thread_override(threads); }
  ~ThreadGuard() { set_thread_override(0); }
};

}  // namespace

TEST_CASE("parallel kernels are bitwise identical to the serial reference") {
  // Sizes straddle the parallel-dispatch grain so both paths are exercised.
  for (std::size_t n : {8u, 64u, 160u}) {
    const ComplexMatrix a = random_matrix(n, n, 1000 + n);
    const ComplexMatrix b = random_matrix(7, 5, 2000 + n);
    const ComplexVector x = random_vector(n, 3000 + n);
    const ComplexMatrix rho = random_matrix(n, n, 4000 + n);

    for (int threads : {1, 2, 3, 8}) {
      ThreadGuard guard(threads);
      CAPTURE(n);
      CAPTURE(threads);
      CHECK(kernels::serial::kron(a, b) == kernels::par::kron(a, b));
      CHECK(kernels::serial::kron(x, x) == kernels::par::kron(x, x));
      CHECK(kernels::serial::matvec(a, x) == kernels::par::matvec(a, x));
      CHECK(kernels::serial::outer(x) == kernels::par::outer(x));
      CHECK(kernels::serial::expectation(a, x) == kernels::par::expectation(a, x));
      CHECK(kernels::serial::trace_product(a, rho) == kernels::par::trace_product(a, rho));

      kernels::ContractGeometry geom;
      geom.subsystem_dim = 4;
      geom.stride = n / 8;
      geom.reduced_dim = n / 4;
      const ComplexVector w = random_vector(geom.reduced_dim, 5000 + n);
      CHECK(kernels::serial::contract(a, w, geom) == kernels::par::contract(a, w, geom));
    }
  }
}

TEST_CASE("dispatching kernels match the serial reference at any thread count") {
  const std::size_t n = 96;
  const ComplexMatrix a = random_matrix(n, n, 21);
  const ComplexVector x = random_vector(n, 22);
  const ComplexMatrix expected_outer = kernels::serial::outer(x);
  const ComplexVector expected_matvec = kernels::serial::matvec(a, x);
  const Complex expected_exp = kernels::serial::expectation(a, x);

  for (int threads : {1, 2, 5}) {
    ThreadGuard guard(threads);
    CHECK(kernels::outer(x) == expected_outer);
    CHECK(kernels::matvec(a, x) == expected_matvec);
    CHECK(kernels::expectation(a, x) == expected_exp);
  }
}

TEST_CASE("kron block structure") {
  const ComplexMatrix a = random_matrix(2, 3, 31);
  const ComplexMatrix b = random_matrix(4, 2, 32);
  const ComplexMatrix ab = kernels::kron(a, b);
  REQUIRE(ab.rows() == 8);
  REQUIRE(ab.cols() == 6);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          CHECK(ab(i * 4 + k, j * 2 + l) == a(i, j) * b(k, l));
}

TEST_CASE("kernel dimension guards") {
  const ComplexMatrix a = random_matrix(4, 4, 41);
  const ComplexVector short_vec = random_vector(3, 42);
  CHECK_THROWS_AS(kernels::matvec(a, short_vec), DimensionMismatch);
  CHECK_THROWS_AS(kernels::expectation(a, short_vec), DimensionMismatch);
  CHECK_THROWS_AS(kernels::trace_product(a, random_matrix(3, 3, 43)), DimensionMismatch);

  kernels::ContractGeometry geom;
  geom.subsystem_dim = 2;
  geom.stride = 1;
  geom.reduced_dim = 3;  // 2 * 3 != 4
  CHECK_THROWS_AS(kernels::contract(a, short_vec, geom), DimensionMismatch);
}

TEST_CASE("trace_product equals trace of the product") {
  const ComplexMatrix p = random_matrix(5, 5, 51);
  const ComplexMatrix rho = random_matrix(5, 5, 52);
  Complex direct(0.0, 0.0);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) direct += p(r, c) * rho(c, r);
  CHECK(std::abs(kernels::trace_product(p, rho) - direct) < 1e-13);
}
