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

#include "witnesskit/separability.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <string>
#include <utility>

#include "witnesskit/errors.hpp"
#include "witnesskit/kernels.hpp"
#include "witnesskit/tensor.hpp"
#include "witnesskit/threads.hpp"

namespace witnesskit {
namespace {

constexpr double kVerdictTol = 1e-8;
constexpr double kAgreementTol = 1e-7;
constexpr double kDegenerateGap = 1e-12;

void require_hermitian(const ComplexMatrix& p, const char* where) {
  const double scale = std::max(1.0, p.max_abs());
  if (p.hermiticity_defect() > 1e-10 * scale)
    throw NotHermitian(std::string(where) + ": max |P - P^dagger| = " +
                       std::to_string(p.hermiticity_defect()));
}

// Extremal eigenpair with the degenerate-subspace tie-break: candidates whose
// eigenvalue sits within kDegenerateGap of the extremum compete on overlap
// with the incumbent local vector.
std::pair<double, ComplexVector> pick_extremal(const EigenSystem& es, Direction direction,
                                               const ComplexVector& incumbent) {
  const std::size_t n = es.eigenvalues.size();
  std::vector<std::size_t> candidates;
  if (direction == Direction::kMin) {
    const double extremal = es.eigenvalues.front();
    for (std::size_t k = 0; k < n && es.eigenvalues[k] - extremal < kDegenerateGap; ++k)
      candidates.push_back(k);
  } else {
    const double extremal = es.eigenvalues.back();
    for (std::size_t k = n; k-- > 0 && extremal - es.eigenvalues[k] < kDegenerateGap;)
      candidates.push_back(k);
  }
  std::size_t best = candidates.front();
  if (candidates.size() > 1) {
    double best_overlap = -1.0;
    for (std::size_t k : candidates) {
      const double overlap = std::abs(incumbent.dot(es.eigenvector(k)));
      if (overlap > best_overlap) {
        best_overlap = overlap;
        best = k;
      }
    }
  }
  return {es.eigenvalues[best], es.eigenvector(best)};
}

struct RestartOutcome {
  double value = 0.0;
  std::vector<ComplexVector> locals;
  bool converged = false;
  std::size_t sweeps = 0;
  std::vector<double> trace;
};

RestartOutcome run_restart(const ComplexMatrix& p, const SystemShape& shape, Direction direction,
                           const SeesawConfig& cfg, std::uint64_t seed) {
  RestartOutcome out;
  out.locals = random_product_locals(shape, seed);
  const std::size_t m = shape.subsystem_count();

  double objective = kernels::expectation(p, kron_all(out.locals)).real();
  if (cfg.record_traces) out.trace.push_back(objective);

  for (std::size_t sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
    double after_sweep = objective;
    for (std::size_t j = 0; j < m; ++j) {
      const ComplexMatrix effective = contract_all_but_one(p, out.locals, j, shape.dims());
      const EigenSystem es = hermitian_eig(effective);
      auto [value, vec] = pick_extremal(es, direction, out.locals[j]);
      out.locals[j] = std::move(vec);
      after_sweep = value;
    }
    out.sweeps = sweep;
    if (cfg.record_traces) out.trace.push_back(after_sweep);
    if (std::abs(after_sweep - objective) < cfg.tolerance) {
      out.converged = true;
      objective = after_sweep;
      break;
    }
    objective = after_sweep;
  }

  // Reported value is recomputed from the final locals so value and argopt
  // are exactly consistent.
  out.value = kernels::expectation(p, kron_all(out.locals)).real();
  return out;
}

bool better(double candidate, double incumbent, Direction direction) {
  return direction == Direction::kMin ? candidate < incumbent : candidate > incumbent;
}

}  // namespace

SeesawResult seesaw_extremal_expectation(const ComplexMatrix& p, const SystemShape& shape,
                                         Direction direction, const SeesawConfig& cfg) {
  if (p.rows() != p.cols() || p.rows() != shape.joint_dim())
    throw DimensionMismatch("seesaw_extremal_expectation: operator is " +
                            std::to_string(p.rows()) + "x" + std::to_string(p.cols()) +
                            ", joint dim is " + std::to_string(shape.joint_dim()));
  require_hermitian(p, "seesaw_extremal_expectation");
  if (cfg.restarts < 1) throw ValidationError("seesaw_extremal_expectation: restarts must be >= 1");
  if (!(cfg.tolerance > 0.0))
    throw ValidationError("seesaw_extremal_expectation: tolerance must be > 0");

  const std::size_t restarts = cfg.restarts;
  std::vector<RestartOutcome> outcomes(restarts);
  std::exception_ptr failure = nullptr;
  const int threads = effective_threads();
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1 && restarts > 1)
  for (std::size_t r = 0; r < restarts; ++r) {
    try {
      outcomes[r] = run_restart(p, shape, direction, cfg, cfg.seed + r);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t winner = 0;
  for (std::size_t r = 1; r < restarts; ++r)
    if (better(outcomes[r].value, outcomes[winner].value, direction)) winner = r;

  SeesawResult result;
  result.value = outcomes[winner].value;
  result.argopt = std::move(outcomes[winner].locals);
  result.sweeps_used = outcomes[winner].sweeps;
  result.converged = true;
  result.restart_values.reserve(restarts);
  for (const RestartOutcome& o : outcomes) {
    result.restart_values.push_back(o.value);
    result.converged = result.converged && o.converged;
    if (std::abs(o.value - result.value) <= kAgreementTol) ++result.restarts_agreeing;
    if (cfg.record_traces) result.traces.push_back(o.trace);
  }
  return result;
}

CertificationReport certify_witness(const Witness& w, const PureState& target,
                                    const SeesawConfig& cfg) {
  if (!(w.shape == target.shape))
    throw DimensionMismatch("certify_witness: witness and target shapes differ");
  require_hermitian(w.matrix, "certify_witness");

  SeesawResult seesaw = seesaw_extremal_expectation(w.matrix, w.shape, Direction::kMin, cfg);

  CertificationReport report;
  report.min_product_expectation = seesaw.value;
  report.argmin = std::move(seesaw.argopt);
  report.is_valid_witness = seesaw.value >= -kVerdictTol;
  report.detection_value = kernels::expectation(w.matrix, target.amplitudes).real();
  report.detects_target = report.detection_value < -kVerdictTol;
  report.converged = seesaw.converged;
  report.sweeps_used = seesaw.sweeps_used;
  report.restarts_agreeing = seesaw.restarts_agreeing;
  return report;
}

double noise_threshold(const Witness& w, const PureState& target) {
  if (!(w.shape == target.shape))
    throw DimensionMismatch("noise_threshold: witness and target shapes differ");
  require_hermitian(w.matrix, "noise_threshold");

  const double d = static_cast<double>(w.shape.joint_dim());
  const double background = w.matrix.trace().real() / d;
  const double on_target = kernels::expectation(w.matrix, target.amplitudes).real();
  // Crossing exists only when the expectation is negative at p=1 and the
  // segment actually descends through zero.
  if (on_target >= 0.0 || on_target >= background)
    throw NoDetection("noise_threshold: expectation at p=1 is " + std::to_string(on_target) +
                      ", background is " + std::to_string(background));
  return background / (background - on_target);
}

double positivity_probe(const Witness& w, std::size_t samples, std::uint64_t seed) {
  require_hermitian(w.matrix, "positivity_probe");
  if (samples == 0) throw ValidationError("positivity_probe: need at least one sample");

  const int threads = effective_threads();
  std::vector<double> product_vals(samples);
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1 && samples > 1)
  for (std::size_t i = 0; i < samples; ++i) {
    const PureState psi = random_product_state(w.shape, seed + i);
    product_vals[i] = kernels::expectation(w.matrix, psi.amplitudes).real();
  }

  const std::size_t mixtures = samples / 10;
  std::vector<double> mixture_vals(mixtures);
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1 && mixtures > 1)
  for (std::size_t i = 0; i < mixtures; ++i) {
    std::mt19937_64 rng(seed + samples + i);
    std::uniform_int_distribution<std::size_t> component_count(2, 5);
    const std::size_t k = component_count(rng);
    const DensityOperator rho = random_separable_mixture(w.shape, k, rng());
    mixture_vals[i] = kernels::trace_product(w.matrix, rho.matrix).real();
  }

  double worst = product_vals[0];
  for (double v : product_vals) worst = std::min(worst, v);
  for (double v : mixture_vals) worst = std::min(worst, v);
  return worst;
}

}  // namespace witnesskit
