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

#include "witnesskit/phase_povm.hpp"

#include <cmath>
#include <string>

#include "witnesskit/errors.hpp"
#include "witnesskit/kernels.hpp"

namespace witnesskit {
namespace {

// e^{i phi}, exact when phi is a floating-point multiple of pi/2. The class
// operators are built from phi in {pi/2, pi}, where the entries must come out
// as exact units for the sign bookkeeping downstream to stay bitwise clean.
Complex unit_phase(double phi) {
  const double k = std::round(phi / M_PI_2);
  if (std::abs(k) <= 8.0 && phi == k * M_PI_2) {
    switch (((static_cast<int>(k) % 4) + 4) % 4) {
      case 0:
        return Complex(1.0, 0.0);
      case 1:
        return Complex(0.0, 1.0);
      case 2:
        return Complex(-1.0, 0.0);
      default:
        return Complex(0.0, -1.0);
    }
  }
  return std::polar(1.0, phi);
}

enum class ClassKind { kW, kGhz };

SignedOperator build_class_operator(const SystemShape& shape, std::size_t r1, std::size_t r2,
                                    ClassKind kind) {
  const std::size_t m = shape.subsystem_count();
  if (r1 < 1 || r2 <= r1 || r2 > m)
    throw BadPositions("class operator: positions (" + std::to_string(r1) + "," +
                       std::to_string(r2) + ") must satisfy 1 <= r1 < r2 <= " + std::to_string(m));

  ComplexMatrix joint;
  bool seeded = false;
  for (std::size_t j = 1; j <= m; ++j) {
    ComplexMatrix factor;
    if (j == r1 || j == r2) {
      factor = delta_tilde(PhaseAssignment{shape.dim(j - 1), M_PI_2});
    } else if (kind == ClassKind::kGhz) {
      factor = delta_tilde(PhaseAssignment{shape.dim(j - 1), M_PI});
    } else {
      factor = ComplexMatrix::identity(shape.dim(j - 1));
    }
    joint = seeded ? kernels::kron(joint, factor) : std::move(factor);
    seeded = true;
  }

  SignedOperator out{shape, std::move(joint), {}};
  const std::size_t d = shape.joint_dim();
  for (std::size_t x = 0; x < d; ++x) {
    const std::vector<std::size_t> row_labels = labels_from_flat(shape, x);
    for (std::size_t y = 0; y < d; ++y) {
      if (out.matrix(x, y) == Complex(0.0, 0.0)) continue;
      const std::vector<std::size_t> col_labels = labels_from_flat(shape, y);
      SignVector signs(m);
      for (std::size_t j = 0; j < m; ++j) {
        if (row_labels[j] == col_labels[j])
          signs[j] = 0;
        else
          signs[j] = row_labels[j] < col_labels[j] ? 1 : -1;
      }
      out.signature.emplace(std::make_pair(x, y), std::move(signs));
    }
  }
  return out;
}

}  // namespace

ComplexMatrix delta(const PhaseAssignment& pa) {
  if (pa.dim < 2) throw DimensionMismatch("delta: local dim must be >= 2");
  ComplexMatrix d(pa.dim, pa.dim);
  const Complex above = unit_phase(pa.phi);
  const Complex below = std::conj(above);
  for (std::size_t k = 0; k < pa.dim; ++k) {
    for (std::size_t l = 0; l < pa.dim; ++l) {
      if (k == l)
        d(k, l) = Complex(1.0, 0.0);
      else
        d(k, l) = k < l ? above : below;
    }
  }
  return d;
}

ComplexMatrix delta_tilde(const PhaseAssignment& pa) {
  ComplexMatrix dt = delta(pa);
  for (std::size_t k = 0; k < pa.dim; ++k) {
    for (std::size_t l = 0; l < pa.dim; ++l) {
      dt(k, l) = (k == l) ? Complex(0.0, 0.0) : -dt(k, l);
    }
  }
  return dt;
}

SignedOperator w_class_operator(const SystemShape& shape, std::size_t r1, std::size_t r2) {
  return build_class_operator(shape, r1, r2, ClassKind::kW);
}

SignedOperator ghz_class_operator(const SystemShape& shape, std::size_t r1, std::size_t r2) {
  return build_class_operator(shape, r1, r2, ClassKind::kGhz);
}

TriangularParts triangular_split(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("triangular_split: matrix is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  const std::size_t n = a.rows();
  TriangularParts parts{ComplexMatrix(n, n), ComplexMatrix(n, n)};
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r < c)
        parts.upper(r, c) = a(r, c);
      else if (r > c)
        parts.lower(r, c) = a(r, c);
    }
  }
  return parts;
}

TriangularParts triangular_split(const SignedOperator& a) { return triangular_split(a.matrix); }

ComplexMatrix sign_restrict(const SignedOperator& a) {
  ComplexMatrix out(a.matrix.rows(), a.matrix.cols());
  for (const auto& [pos, signs] : a.signature) {
    int seen = 0;
    bool uniform = true;
    for (std::int8_t s : signs) {
      if (s == 0) continue;
      if (seen == 0)
        seen = s;
      else if (s != seen)
        uniform = false;
    }
    if (seen != 0 && uniform) out(pos.first, pos.second) = a.matrix(pos.first, pos.second);
  }
  return out;
}

}  // namespace witnesskit
