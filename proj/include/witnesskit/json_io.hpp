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

#ifndef WITNESSKIT_JSON_IO_HPP_
#define WITNESSKIT_JSON_IO_HPP_

#include <string>
#include <variant>

#include "witnesskit/concurrence.hpp"
#include "witnesskit/phase_povm.hpp"
#include "witnesskit/separability.hpp"
#include "witnesskit/states.hpp"
#include "witnesskit/witness.hpp"

// Serialization is hand-rolled so that doubles are always rendered with 17
// significant digits in a fixed field order: identical values produce
// byte-identical reports. Parsing goes through a standard JSON library and
// validates shape, finiteness, and normalization before constructing values.

namespace witnesskit {

std::string to_json(const PureState& psi);
std::string to_json(const DensityOperator& rho);
std::string to_json(const Witness& w);
std::string to_json(const SignedOperator& op);
std::string to_json(const ConcurrenceBreakdown& breakdown);
std::string to_json(const DiscrepancyReport& report);
std::string to_json(const CertificationReport& report, const SystemShape& shape);

/// Key for a W-class term, e.g. "W[1,2|1]": qubit pair plus fixed context
/// labels (omitted for m = 2).
std::string w_term_key(const WTermKey& key);

/// Key for a GHZ-class term, e.g. "GHZ[111,122]": the label strings of the
/// two complementary-product representatives.
std::string ghz_term_key(const GhzTermKey& key, const SystemShape& shape);

PureState state_from_json(const std::string& text);
DensityOperator density_from_json(const std::string& text);
Witness witness_from_json(const std::string& text);

/// Loader for inputs that may be either a pure state ("amplitudes") or a
/// density operator ("matrix").
std::variant<PureState, DensityOperator> state_or_density_from_json(const std::string& text);

WitnessForm witness_form_from_string(const std::string& name);

/// Escapes a string for embedding in a JSON document (quotes, backslashes,
/// control characters).
std::string json_escape(const std::string& raw);

}  // namespace witnesskit

#endif  // WITNESSKIT_JSON_IO_HPP_
