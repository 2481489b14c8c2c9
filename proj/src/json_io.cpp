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

#include "witnesskit/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "witnesskit/errors.hpp"

namespace witnesskit {
namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void append_pair(std::string& out, const Complex& z) {
  out += '[';
  out += fmt(z.real());
  out += ',';
  out += fmt(z.imag());
  out += ']';
}

void append_dims(std::string& out, const SystemShape& shape) {
  out += "\"dims\":[";
  for (std::size_t j = 0; j < shape.subsystem_count(); ++j) {
    if (j) out += ',';
    out += std::to_string(shape.dim(j));
  }
  out += ']';
}

void append_matrix(std::string& out, const ComplexMatrix& m) {
  out += "\"matrix\":[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      append_pair(out, m(r, c));
    }
    out += ']';
  }
  out += ']';
}

void append_amplitudes(std::string& out, const ComplexVector& v) {
  out += "\"amplitudes\":[";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ',';
    append_pair(out, v[i]);
  }
  out += ']';
}

std::string labels_string(const SystemShape& shape, std::size_t flat) {
  std::string s;
  for (std::size_t label : labels_from_flat(shape, flat)) s += std::to_string(label);
  return s;
}

const json& require_field(const json& j, const char* key, const char* where) {
  const auto it = j.find(key);
  if (it == j.end())
    throw ValidationError(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

double finite_number(const json& j, const char* where) {
  if (!j.is_number()) throw ValidationError(std::string(where) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ValidationError(std::string(where) + ": non-finite value");
  return v;
}

Complex pair_to_complex(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2)
    throw ValidationError(std::string(where) + ": expected an [re, im] pair");
  return Complex(finite_number(j[0], where), finite_number(j[1], where));
}

SystemShape dims_to_shape(const json& j, const char* where) {
  const json& dims = require_field(j, "dims", where);
  if (!dims.is_array() || dims.empty())
    throw ValidationError(std::string(where) + ": \"dims\" must be a non-empty array");
  std::vector<std::size_t> out;
  out.reserve(dims.size());
  for (const json& d : dims) {
    if (!d.is_number_unsigned() || d.get<std::uint64_t>() < 2)
      throw ValidationError(std::string(where) + ": every dim must be an integer >= 2");
    out.push_back(d.get<std::size_t>());
  }
  return SystemShape(std::move(out));
}

ComplexVector amplitudes_to_vector(const json& j, std::size_t expected, const char* where) {
  const json& amps = require_field(j, "amplitudes", where);
  if (!amps.is_array() || amps.size() != expected)
    throw ValidationError(std::string(where) + ": \"amplitudes\" must be an array of length " +
                          std::to_string(expected));
  ComplexVector v(expected);
  for (std::size_t i = 0; i < expected; ++i) v[i] = pair_to_complex(amps[i], where);
  return v;
}

ComplexMatrix matrix_to_matrix(const json& j, std::size_t expected, const char* where) {
  const json& rows = require_field(j, "matrix", where);
  if (!rows.is_array() || rows.size() != expected)
    throw ValidationError(std::string(where) + ": \"matrix\" must have " +
                          std::to_string(expected) + " rows");
  ComplexMatrix m(expected, expected);
  for (std::size_t r = 0; r < expected; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != expected)
      throw ValidationError(std::string(where) + ": row " + std::to_string(r) + " must have " +
                            std::to_string(expected) + " entries");
    for (std::size_t c = 0; c < expected; ++c) m(r, c) = pair_to_complex(row[c], where);
  }
  return m;
}

json parse(const std::string& text, const char* where) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {  // parse errors and number overflow
    throw ValidationError(std::string(where) + ": " + e.what());
  }
}

}  // namespace

std::string to_json(const PureState& psi) {
  std::string out = "{";
  append_dims(out, psi.shape);
  out += ',';
  append_amplitudes(out, psi.amplitudes);
  out += '}';
  return out;
}

std::string to_json(const DensityOperator& rho) {
  std::string out = "{";
  append_dims(out, rho.shape);
  out += ',';
  append_matrix(out, rho.matrix);
  out += '}';
  return out;
}

std::string to_json(const Witness& w) {
  std::string out = "{";
  append_dims(out, w.shape);
  out += ",\"gamma\":";
  out += fmt(w.gamma);
  out += ",\"form\":\"";
  out += to_string(w.form);
  out += "\",\"source\":\"";
  out += json_escape(w.source);
  out += "\",";
  append_matrix(out, w.matrix);
  out += '}';
  return out;
}

std::string to_json(const SignedOperator& op) {
  std::string out = "{";
  append_dims(out, op.shape);
  out += ',';
  append_matrix(out, op.matrix);
  out += ",\"signature\":{";
  bool first = true;
  for (const auto& [pos, signs] : op.signature) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += std::to_string(pos.first);
    out += ',';
    out += std::to_string(pos.second);
    out += "\":[";
    for (std::size_t j = 0; j < signs.size(); ++j) {
      if (j) out += ',';
      out += signs[j] == 0 ? "\"0\"" : (signs[j] > 0 ? "\"+\"" : "\"-\"");
    }
    out += ']';
  }
  out += "}}";
  return out;
}

std::string w_term_key(const WTermKey& key) {
  std::string s = "W[" + std::to_string(key.r1) + "," + std::to_string(key.r2);
  if (!key.context.empty()) {
    s += '|';
    for (std::size_t label : key.context) s += std::to_string(label);
  }
  s += ']';
  return s;
}

std::string ghz_term_key(const GhzTermKey& key, const SystemShape& shape) {
  return "GHZ[" + labels_string(shape, key.first) + "," + labels_string(shape, key.second) + "]";
}

std::string to_json(const ConcurrenceBreakdown& breakdown) {
  std::string out = "{\"normalization\":";
  out += fmt(breakdown.normalization);
  out += ",\"total_squared\":";
  out += fmt(breakdown.total_squared);
  out += ",\"total\":";
  out += fmt(breakdown.total);
  out += ",\"w_terms\":{";
  bool first = true;
  for (const auto& [key, value] : breakdown.w_terms) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += w_term_key(key);
    out += "\":";
    out += fmt(value);
  }
  out += "},\"ghz_terms\":{";
  // GHZ keys need the qubit count; recover it from the largest representative.
  std::size_t m = 2;
  if (!breakdown.w_terms.empty()) m = breakdown.w_terms.begin()->first.context.size() + 2;
  const SystemShape shape = SystemShape::qubits(m);
  first = true;
  for (const auto& [key, value] : breakdown.ghz_terms) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += ghz_term_key(key, shape);
    out += "\":";
    out += fmt(value);
  }
  out += "}}";
  return out;
}

std::string to_json(const DiscrepancyReport& report) {
  std::string out = "{\"max_abs_diff\":";
  out += fmt(report.max_abs_diff);
  out += ",\"a_hermitian\":";
  out += report.a_hermitian ? "true" : "false";
  out += ",\"b_hermitian\":";
  out += report.b_hermitian ? "true" : "false";
  out += ",\"positions\":[";
  for (std::size_t i = 0; i < report.positions.size(); ++i) {
    if (i) out += ',';
    const auto& p = report.positions[i];
    out += "{\"row\":";
    out += std::to_string(p.row);
    out += ",\"col\":";
    out += std::to_string(p.col);
    out += ",\"a\":";
    append_pair(out, p.a);
    out += ",\"b\":";
    append_pair(out, p.b);
    out += '}';
  }
  out += "]}";
  return out;
}

std::string to_json(const CertificationReport& report, const SystemShape& shape) {
  std::string out = "{\"min_product_expectation\":";
  out += fmt(report.min_product_expectation);
  out += ",\"is_valid_witness\":";
  out += report.is_valid_witness ? "true" : "false";
  out += ",\"detection_value\":";
  out += fmt(report.detection_value);
  out += ",\"detects_target\":";
  out += report.detects_target ? "true" : "false";
  out += ",\"converged\":";
  out += report.converged ? "true" : "false";
  out += ",\"sweeps_used\":";
  out += std::to_string(report.sweeps_used);
  out += ",\"restarts_agreeing\":";
  out += std::to_string(report.restarts_agreeing);
  out += ",\"argmin\":[";
  for (std::size_t j = 0; j < report.argmin.size(); ++j) {
    if (j) out += ',';
    out += "{\"dims\":[";
    out += std::to_string(shape.dim(j));
    out += "],";
    append_amplitudes(out, report.argmin[j]);
    out += '}';
  }
  out += "]}";
  return out;
}

PureState state_from_json(const std::string& text) {
  const json j = parse(text, "state");
  SystemShape shape = dims_to_shape(j, "state");
  ComplexVector amps = amplitudes_to_vector(j, shape.joint_dim(), "state");
  return PureState(std::move(shape), std::move(amps));
}

DensityOperator density_from_json(const std::string& text) {
  const json j = parse(text, "density");
  SystemShape shape = dims_to_shape(j, "density");
  ComplexMatrix m = matrix_to_matrix(j, shape.joint_dim(), "density");
  return DensityOperator(std::move(shape), std::move(m));
}

Witness witness_from_json(const std::string& text) {
  const json j = parse(text, "witness");
  SystemShape shape = dims_to_shape(j, "witness");
  const double gamma = finite_number(require_field(j, "gamma", "witness"), "witness");
  const json& form = require_field(j, "form", "witness");
  if (!form.is_string()) throw ValidationError("witness: \"form\" must be a string");
  WitnessForm parsed_form = witness_form_from_string(form.get<std::string>());
  std::string source = "file";
  if (const auto it = j.find("source"); it != j.end() && it->is_string())
    source = it->get<std::string>();
  ComplexMatrix m = matrix_to_matrix(j, shape.joint_dim(), "witness");
  return Witness{std::move(shape), std::move(m), gamma, std::move(source), parsed_form};
}

std::variant<PureState, DensityOperator> state_or_density_from_json(const std::string& text) {
  const json j = parse(text, "input");
  if (j.contains("amplitudes")) return state_from_json(text);
  if (j.contains("matrix")) return density_from_json(text);
  throw ValidationError("input: need either \"amplitudes\" (state) or \"matrix\" (density)");
}

WitnessForm witness_form_from_string(const std::string& name) {
  if (name == "canonical") return WitnessForm::kCanonical;
  if (name == "operator_form") return WitnessForm::kOperatorForm;
  if (name == "hermitized_operator_form") return WitnessForm::kHermitizedOperatorForm;
  throw ValidationError("unknown witness form \"" + name + "\"");
}

std::string json_escape(const std::string& raw) {
  std::string out;
  out.reserve(raw.size());
  for (char ch : raw) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
        break;
    }
  }
  return out;
}

}  // namespace witnesskit
