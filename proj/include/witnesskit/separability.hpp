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

#ifndef WITNESSKIT_SEPARABILITY_HPP_
#define WITNESSKIT_SEPARABILITY_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "witnesskit/complex_types.hpp"
#include "witnesskit/states.hpp"
#include "witnesskit/witness.hpp"

namespace witnesskit {

struct SeesawConfig {
  std::size_t restarts = 50;
  std::size_t max_sweeps = 500;
  double tolerance = 1e-10;  // change-in-objective stopping rule, per sweep
  std::uint64_t seed = 0;
  bool record_traces = false;
};

enum class Direction { kMin, kMax };

struct SeesawResult {
  double value = 0.0;
  std::vector<ComplexVector> argopt;  // per-subsystem local vectors
  bool converged = false;             // every restart met tolerance in budget
  std::size_t sweeps_used = 0;        // sweeps consumed by the winning restart
  std::size_t restarts_agreeing = 0;  // within 1e-7 of value
  std::vector<double> restart_values;
  std::vector<std::vector<double>> traces;  // per-sweep objectives, if recorded
};

/// Extremal <v1 x ... x vm | P | v1 x ... x vm> over product states by
/// alternating eigenvector updates: each sweep contracts P against all local
/// vectors but one and replaces that one with the extremal eigenvector of the
/// effective matrix. Restarts run from independent seeded starting points
/// (seed + restart index) and may execute in parallel; the reduction over
/// restarts is a serial min/max, so results do not depend on thread count.
/// By trace linearity the product-state extremum is the separable-set one.
SeesawResult seesaw_extremal_expectation(const ComplexMatrix& p, const SystemShape& shape,
                                         Direction direction, const SeesawConfig& cfg);

struct CertificationReport {
  double min_product_expectation = 0.0;
  std::vector<ComplexVector> argmin;
  bool is_valid_witness = false;  // min_product_expectation >= -1e-8
  double detection_value = 0.0;   // <target| W |target>
  bool detects_target = false;    // detection_value < -1e-8
  bool converged = false;
  std::size_t sweeps_used = 0;
  std::size_t restarts_agreeing = 0;
};

/// Certifies both witness conditions: nonnegativity over separable states
/// (via the see-saw minimum) and strict negativity on the target. Literal
/// non-Hermitian operator-form witnesses are rejected; hermitize first.
CertificationReport certify_witness(const Witness& w, const PureState& target,
                                    const SeesawConfig& cfg);

/// Mixing weight p* where Tr(W (p |psi><psi| + (1-p) I/d)) crosses zero; the
/// mixture is detected for all p > p*. Throws NoDetection when the expectation
/// never turns negative on the mixing segment.
double noise_threshold(const Witness& w, const PureState& target);

/// Minimum witness expectation over `samples` random product states plus
/// samples/10 random separable mixtures. A sampling complement to the see-saw
/// certificate, never a replacement for it.
double positivity_probe(const Witness& w, std::size_t samples, std::uint64_t seed);

}  // namespace witnesskit

#endif  // WITNESSKIT_SEPARABILITY_HPP_
