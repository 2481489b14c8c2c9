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

#include "witnesskit/witness.hpp"

#include <cmath>
#include <utility>

#include "witnesskit/concurrence.hpp"
#include "witnesskit/errors.hpp"
#include "witnesskit/kernels.hpp"
#include "witnesskit/phase_povm.hpp"

namespace witnesskit {
namespace {

constexpr double kSupportTol = 1e-12;
constexpr double kDiffTol = 1e-9;
constexpr double kHermitianTol = 1e-10;

}  // namespace

std::string to_string(WitnessForm form) {
  switch (form) {
    case WitnessForm::kCanonical:
      return "canonical";
    case WitnessForm::kOperatorForm:
      return "operator_form";
    default:
      return "hermitized_operator_form";
  }
}

ComplexMatrix DiagonalSupportMatrix::as_matrix() const {
  ComplexMatrix d(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) d(i, i) = Complex(entries[i], 0.0);
  return d;
}

Witness canonical_witness(const PureState& psi, std::optional<double> gamma, std::string source) {
  const double g = gamma.has_value() ? *gamma : concurrence_squared(psi);
  ComplexMatrix w = kernels::outer(psi.amplitudes);
  const std::size_t d = psi.shape.joint_dim();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      w(r, c) = (r == c) ? Complex(g, 0.0) - w(r, c) : -w(r, c);
    }
  }
  return Witness{psi.shape, std::move(w), g, std::move(source), WitnessForm::kCanonical};
}

DiagonalSupportMatrix support_diagonal(const PureState& psi, double c_squared) {
  DiagonalSupportMatrix out;
  out.c = c_squared;
  out.c_bar = c_squared - 1.0;
  const std::size_t d = psi.shape.joint_dim();
  out.entries.resize(d);
  for (std::size_t i = 0; i < d; ++i)
    out.entries[i] = std::abs(psi.amplitudes[i]) > kSupportTol ? out.c_bar : out.c;
  return out;
}

Witness operator_form_witness(TargetKind kind, std::size_t m, bool hermitize) {
  if (m < 2) throw BadArity("operator_form_witness: need m >= 2");
  const SystemShape shape = SystemShape::qubits(m);
  const PureState target = kind == TargetKind::kGhz ? ghz_state(m) : w_state(m);
  const double c2 = concurrence_squared(target);
  const DiagonalSupportMatrix diag = support_diagonal(target, c2);

  ComplexMatrix w = diag.as_matrix();
  if (kind == TargetKind::kGhz) {
    w -= sign_restrict(ghz_class_operator(shape, 1, 2));
  } else {
    for (std::size_t r = 1; r < m; ++r)
      for (std::size_t s = r + 1; s <= m; ++s)
        w -= triangular_split(sign_restrict(w_class_operator(shape, r, s))).upper;
  }
  std::string source = (kind == TargetKind::kGhz ? "ghz_state(" : "w_state(") + std::to_string(m) + ")";
  if (!hermitize)
    return Witness{shape, std::move(w), c2, std::move(source), WitnessForm::kOperatorForm};

  ComplexMatrix sym = w.adjoint();
  sym += w;
  sym *= Complex(0.5, 0.0);
  return Witness{shape, std::move(sym), c2, std::move(source),
                 WitnessForm::kHermitizedOperatorForm};
}

DiscrepancyReport compare_witnesses(const Witness& a, const Witness& b) {
  if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols())
    throw DimensionMismatch("compare_witnesses: " + std::to_string(a.matrix.rows()) + "x" +
                            std::to_string(a.matrix.cols()) + " vs " +
                            std::to_string(b.matrix.rows()) + "x" +
                            std::to_string(b.matrix.cols()));
  DiscrepancyReport report;
  report.a_hermitian = a.matrix.hermiticity_defect() <= kHermitianTol;
  report.b_hermitian = b.matrix.hermiticity_defect() <= kHermitianTol;
  for (std::size_t r = 0; r < a.matrix.rows(); ++r) {
    for (std::size_t c = 0; c < a.matrix.cols(); ++c) {
      const double diff = std::abs(a.matrix(r, c) - b.matrix(r, c));
      if (diff > report.max_abs_diff) report.max_abs_diff = diff;
      if (diff > kDiffTol)
        report.positions.push_back({r, c, a.matrix(r, c), b.matrix(r, c)});
    }
  }
  return report;
}

}  // namespace witnesskit
