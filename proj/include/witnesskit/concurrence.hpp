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

#ifndef WITNESSKIT_CONCURRENCE_HPP_
#define WITNESSKIT_CONCURRENCE_HPP_

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "witnesskit/states.hpp"

namespace witnesskit {

/// One pairwise minor term: qubit pair (r1, r2), 1-based, plus the fixed
/// 1-based labels of the remaining qubits in position order.
struct WTermKey {
  std::size_t r1;
  std::size_t r2;
  std::vector<std::size_t> context;

  friend bool operator<(const WTermKey& a, const WTermKey& b) {
    if (a.r1 != b.r1) return a.r1 < b.r1;
    if (a.r2 != b.r2) return a.r2 < b.r2;
    return a.context < b.context;
  }
  friend bool operator==(const WTermKey& a, const WTermKey& b) {
    return a.r1 == b.r1 && a.r2 == b.r2 && a.context == b.context;
  }
};

/// One complementary-product difference term, identified by the flat indices
/// (x, y) of the two product representatives, x < y < 2^(m-1).
using GhzTermKey = std::pair<std::size_t, std::size_t>;

/// Per-term audit of a concurrence evaluation. Term values carry their class
/// coefficients (2 per W-class minor, 1 per GHZ-class difference), so
/// total_squared = normalization * (sum of all terms).
struct ConcurrenceBreakdown {
  std::map<WTermKey, double> w_terms;
  std::map<GhzTermKey, double> ghz_terms;
  double normalization = 1.0;
  double total_squared = 0.0;
  double total = 0.0;
};

/// The exact 12-term three-qubit closed form: six doubled pairwise minors and
/// six differences among the four complementary products.
ConcurrenceBreakdown three_qubit_concurrence(const PureState& psi);

/// Sum over the 2^(m-2) fixed contexts of 2 |a(k,k')a(l,l') - a(k,l')a(l,k')|^2
/// for the 1-based qubit pair (r1, r2).
double w_class_terms(const PureState& psi, std::size_t r1, std::size_t r2);

/// Sum over unordered pairs of complementary label pairs of
/// |a_x a_xbar - a_y a_ybar|^2, where xbar flips every qubit label of x.
double ghz_class_terms(const PureState& psi);

/// total_squared = normalization * (sum_{r1<r2} w_class_terms + ghz_class_terms).
/// For m = 3 with the default normalization 1 this matches the closed form.
ConcurrenceBreakdown concurrence_general(const PureState& psi, double normalization = 1.0);

/// Convenience: total_squared of concurrence_general with default weights.
double concurrence_squared(const PureState& psi);

}  // namespace witnesskit

#endif  // WITNESSKIT_CONCURRENCE_HPP_
