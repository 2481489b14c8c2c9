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

#ifndef WITNESSKIT_WITNESS_HPP_
#define WITNESSKIT_WITNESS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "witnesskit/complex_types.hpp"
#include "witnesskit/states.hpp"

namespace witnesskit {

enum class WitnessForm { kCanonical, kOperatorForm, kHermitizedOperatorForm };

std::string to_string(WitnessForm form);

struct Witness {
  SystemShape shape;
  ComplexMatrix matrix;
  double gamma;
  std::string source;
  WitnessForm form;
};

/// Real diagonal with c_bar = c_squared - 1 on the target state's support
/// (|amplitude| > 1e-12) and c = c_squared elsewhere.
struct DiagonalSupportMatrix {
  std::vector<double> entries;
  double c_bar;
  double c;
  ComplexMatrix as_matrix() const;
};

/// gamma * I - |psi><psi|. gamma defaults to the squared concurrence of psi;
/// validity as a witness is certified separately, never assumed.
Witness canonical_witness(const PureState& psi, std::optional<double> gamma = std::nullopt,
                          std::string source = "pure_state");

DiagonalSupportMatrix support_diagonal(const PureState& psi, double c_squared);

enum class TargetKind { kGhz, kW };

/// Diagonal-minus-operator recipe. For kGhz: support diagonal of ghz_state(m)
/// minus the sign-restricted GHZ-class operator at positions (1,2). For kW:
/// support diagonal of w_state(m) minus the sum over r < s of the upper
/// triangle of each sign-restricted W-class operator; that literal matrix is
/// not Hermitian, so a hermitized variant (A + A^dagger)/2 is available.
Witness operator_form_witness(TargetKind kind, std::size_t m, bool hermitize = false);

struct DiscrepancyReport {
  struct Position {
    std::size_t row;
    std::size_t col;
    Complex a;
    Complex b;
  };
  double max_abs_diff = 0.0;
  std::vector<Position> positions;  // |a - b| > 1e-9, row-major order
  bool a_hermitian = false;
  bool b_hermitian = false;
};

/// Entrywise audit of two witnesses of equal dimension.
DiscrepancyReport compare_witnesses(const Witness& a, const Witness& b);

}  // namespace witnesskit

#endif  // WITNESSKIT_WITNESS_HPP_
