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

#include "witnesskit/kernels.hpp"

#include <vector>

#include "witnesskit/errors.hpp"
#include "witnesskit/threads.hpp"

namespace witnesskit::kernels {

namespace {

// Below this element count the OpenMP variants run their loops undivided.
constexpr std::size_t kParallelGrain = 1 << 12;

void check_square(const ComplexMatrix& p, const char* who) {
  if (p.rows() != p.cols()) throw DimensionMismatch(std::string(who) + ": matrix is not square");
}

void check_matvec(const ComplexMatrix& a, const ComplexVector& x, const char* who) {
  if (a.cols() != x.dim()) throw DimensionMismatch(std::string(who) + ": dimensions disagree");
}

void check_contract(const ComplexMatrix& p, const ComplexVector& w, const ContractGeometry& g) {
  check_square(p, "contract");
  if (g.subsystem_dim == 0 || g.stride == 0 || g.reduced_dim == 0)
    throw DimensionMismatch("contract: degenerate geometry");
  if (w.dim() != g.reduced_dim) throw DimensionMismatch("contract: weight vector has wrong length");
  if (p.rows() != g.reduced_dim * g.subsystem_dim)
    throw DimensionMismatch("contract: operator does not match the geometry");
}

// embed(x, k) under the row-major layout: x = hi * stride + lo picks the
// labels of the other subsystems, k the label at the contracted position.
inline std::size_t embed_base(std::size_t x, const ContractGeometry& g) {
  const std::size_t hi = x / g.stride;
  const std::size_t lo = x % g.stride;
  return hi * (g.subsystem_dim * g.stride) + lo;
}

}  // namespace

// ---------------------------------------------------------------------------
// Serial reference implementations.
// ---------------------------------------------------------------------------

namespace serial {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rb = b.rows(), cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (std::size_t r = 0; r < out.rows(); ++r) {
    const std::size_t i1 = r / rb, i2 = r % rb;
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex av = a(i1, j1);
      for (std::size_t j2 = 0; j2 < cb; ++j2) out(r, j1 * cb + j2) = av * b(i2, j2);
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
  check_matvec(a, x, "matvec");
  ComplexVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Complex acc(0.0, 0.0);
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix outer(const ComplexVector& v) {
  ComplexMatrix out(v.dim(), v.dim());
  for (std::size_t r = 0; r < v.dim(); ++r)
    for (std::size_t c = 0; c < v.dim(); ++c) out(r, c) = v[r] * std::conj(v[c]);
  return out;
}

Complex expectation(const ComplexMatrix& p, const ComplexVector& v) {
  check_square(p, "expectation");
  check_matvec(p, v, "expectation");
  const std::size_t d = v.dim();
  std::vector<Complex> row_part(d);
  for (std::size_t r = 0; r < d; ++r) {
    Complex acc(0.0, 0.0);
    for (std::size_t c = 0; c < d; ++c) acc += p(r, c) * v[c];
    row_part[r] = std::conj(v[r]) * acc;
  }
  Complex total(0.0, 0.0);
  for (std::size_t r = 0; r < d; ++r) total += row_part[r];
  return total;
}

Complex trace_product(const ComplexMatrix& p, const ComplexMatrix& rho) {
  check_square(p, "trace_product");
  if (rho.rows() != p.rows() || rho.cols() != p.cols())
    throw DimensionMismatch("trace_product: dimensions disagree");
  const std::size_t d = p.rows();
  std::vector<Complex> row_part(d);
  for (std::size_t r = 0; r < d; ++r) {
    Complex acc(0.0, 0.0);
    for (std::size_t c = 0; c < d; ++c) acc += p(r, c) * rho(c, r);
    row_part[r] = acc;
  }
  Complex total(0.0, 0.0);
  for (std::size_t r = 0; r < d; ++r) total += row_part[r];
  return total;
}

ComplexMatrix contract(const ComplexMatrix& p, const ComplexVector& w, const ContractGeometry& g) {
  check_contract(p, w, g);
  const std::size_t n = g.subsystem_dim, red = g.reduced_dim;
  std::vector<std::size_t> base(red);
  for (std::size_t x = 0; x < red; ++x) base[x] = embed_base(x, g);
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      Complex acc(0.0, 0.0);
      for (std::size_t x = 0; x < red; ++x) {
        const std::size_t row = base[x] + k * g.stride;
        Complex inner(0.0, 0.0);
        for (std::size_t y = 0; y < red; ++y) inner += p(row, base[y] + l * g.stride) * w[y];
        acc += std::conj(w[x]) * inner;
      }
      out(k, l) = acc;
    }
  }
  return out;
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP implementations. Each output element (or ordered row partial) is
// produced by a single thread with the same inner loop order as the serial
// reference, so results match it bitwise for any thread count.
// ---------------------------------------------------------------------------

namespace par {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rb = b.rows(), cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  const std::size_t rows = out.rows();
  const int threads = effective_threads();
#pragma omp parallel for schedule(static) num_threads(threads) if (rows * out.cols() >= kParallelGrain && threads > 1)
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t i1 = r / rb, i2 = r % rb;
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex av = a(i1, j1);
      for (std::size_t j2 = 0; j2 < cb; ++j2) out(r, j1 * cb + j2) = av * b(i2, j2);
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.dim() * b.dim());
  const std::size_t da = a.dim(), db = b.dim();
  const int threads = effective_threads();
#pragma omp parallel for schedule(static) num_threads(threads) if (da * db >= kParallelGrain && threads > 1)
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) out[i * db + j] = a[i] * b[j];
  return out;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
  check_matvec(a, x, "matvec");
  ComplexVector out(a.rows());
  const std::size_t rows = a.rows(), cols = a.cols();
  const int threads = effective_threads();
#pragma omp parallel for schedule(static) num_threads(threads) if (rows * cols >= kParallelGrain && threads > 1)
  for (std::size_t r = 0; r < rows; ++r) {
    Complex acc(0.0, 0.0);
    for (std::size_t c = 0; c < cols; ++c) acc += a(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix outer(const ComplexVector& v) {
  ComplexMatrix out(v.dim(), v.dim());
  const std::size_t d = v.dim();
  const int threads = effective_threads();
#pragma omp parallel for schedule(static) num_threads(threads) if (d * d >= kParallelGrain && threads > 1)
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out(r, c) = v[r] * std::conj(v[c]);
  return out;
}

Complex expectation(const ComplexMatrix& p, const ComplexVector& v) {
  check_square(p, "expectation");
  check_matvec(p, v, "expectation");
  const std::size_t d = v.dim();
  std::vector<Complex> row_part(d);
  const int threads = effective_threads();
#pragma omp parallel for schedule(static) num_threads(threads) if (d * d >= kParallelGrain && threads > 1)
  for (std::size_t r = 0; r < d; ++r) {
    Complex acc(0.0, 0.0);
    for (std::size_t c = 0; c < d; ++c) acc += p(r, c) * v[c];
    row_part[r] = std::conj(v[r]) * acc;
  }
  // Ordered reduction keeps the result independent of the thread count.
  Complex total(0.0, 0.0);
  for (std::size_t r = 0; r < d; ++r) total += row_part[r];
  return total;
}

Complex trace_product(const ComplexMatrix& p, const ComplexMatrix& rho) {
  check_square(p, "trace_product");
  if (rho.rows() != p.rows() || rho.cols() != p.cols())
    throw DimensionMismatch("trace_product: dimensions disagree");
  const std::size_t d = p.rows();
  std::vector<Complex> row_part(d);
  const int threads = effective_threads();
#pragma omp parallel for schedule(static) num_threads(threads) if (d * d >= kParallelGrain && threads > 1)
  for (std::size_t r = 0; r < d; ++r) {
    Complex acc(0.0, 0.0);
    for (std::size_t c = 0; c < d; ++c) acc += p(r, c) * rho(c, r);
    row_part[r] = acc;
  }
  Complex total(0.0, 0.0);
  for (std::size_t r = 0; r < d; ++r) total += row_part[r];
  return total;
}

ComplexMatrix contract(const ComplexMatrix& p, const ComplexVector& w, const ContractGeometry& g) {
  check_contract(p, w, g);
  const std::size_t n = g.subsystem_dim, red = g.reduced_dim;
  std::vector<std::size_t> base(red);
  for (std::size_t x = 0; x < red; ++x) base[x] = embed_base(x, g);
  ComplexMatrix out(n, n);
  const int threads = effective_threads();
#pragma omp parallel for collapse(2) schedule(static) num_threads(threads) if (red * red >= kParallelGrain && threads > 1)
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      Complex acc(0.0, 0.0);
      for (std::size_t x = 0; x < red; ++x) {
        const std::size_t row = base[x] + k * g.stride;
        Complex inner(0.0, 0.0);
        for (std::size_t y = 0; y < red; ++y) inner += p(row, base[y] + l * g.stride) * w[y];
        acc += std::conj(w[x]) * inner;
      }
      out(k, l) = acc;
    }
  }
  return out;
}

}  // namespace par

// ---------------------------------------------------------------------------
// Dispatchers.
// ---------------------------------------------------------------------------

namespace {

inline bool go_parallel(std::size_t work) {
  return work >= kParallelGrain && effective_threads() > 1;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return go_parallel(a.rows() * b.rows() * a.cols() * b.cols()) ? par::kron(a, b)
                                                                : serial::kron(a, b);
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  return go_parallel(a.dim() * b.dim()) ? par::kron(a, b) : serial::kron(a, b);
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
  return go_parallel(a.rows() * a.cols()) ? par::matvec(a, x) : serial::matvec(a, x);
}

ComplexMatrix outer(const ComplexVector& v) {
  return go_parallel(v.dim() * v.dim()) ? par::outer(v) : serial::outer(v);
}

Complex expectation(const ComplexMatrix& p, const ComplexVector& v) {
  return go_parallel(p.rows() * p.cols()) ? par::expectation(p, v) : serial::expectation(p, v);
}

Complex trace_product(const ComplexMatrix& p, const ComplexMatrix& rho) {
  return go_parallel(p.rows() * p.cols()) ? par::trace_product(p, rho)
                                          : serial::trace_product(p, rho);
}

ComplexMatrix contract(const ComplexMatrix& p, const ComplexVector& w, const ContractGeometry& g) {
  return go_parallel(g.reduced_dim * g.reduced_dim) ? par::contract(p, w, g)
                                                    : serial::contract(p, w, g);
}

}  // namespace witnesskit::kernels
