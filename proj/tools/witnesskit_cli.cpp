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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "witnesskit/concurrence.hpp"
#include "witnesskit/errors.hpp"
#include "witnesskit/json_io.hpp"
#include "witnesskit/separability.hpp"
#include "witnesskit/states.hpp"
#include "witnesskit/tensor.hpp"
#include "witnesskit/witness.hpp"

namespace {

using namespace witnesskit;

constexpr std::size_t kMaxQubits = 12;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitNoDetection = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open \"" + path + "\" for writing");
  out << payload << '\n';
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void enforce_qubit_cap(const SystemShape& shape) {
  if (shape.subsystem_count() > kMaxQubits)
    throw ValidationError("at most " + std::to_string(kMaxQubits) +
                          " subsystems are supported (dense joint-space representation); got " +
                          std::to_string(shape.subsystem_count()));
}

PureState load_state(const std::string& path) {
  PureState psi = state_from_json(read_input(path));
  enforce_qubit_cap(psi.shape);
  return psi;
}

Witness load_witness(const std::string& path) {
  Witness w = witness_from_json(read_input(path));
  enforce_qubit_cap(w.shape);
  return w;
}

struct StateMakeOpts {
  std::string kind;
  std::size_t qubits = 0;
  std::string out = "-";
  bool pretty = false;
};

int run_state_make(const StateMakeOpts& opt) {
  if (opt.qubits < 2 || opt.qubits > kMaxQubits)
    throw ValidationError("--qubits must be between 2 and " + std::to_string(kMaxQubits));
  const PureState psi = opt.kind == "ghz" ? ghz_state(opt.qubits) : w_state(opt.qubits);
  const std::string payload = to_json(psi);
  if (opt.pretty) {
    std::cout << opt.kind << " state on " << opt.qubits << " qubits (joint dim "
              << psi.shape.joint_dim() << ")\n";
    if (opt.out != "-") write_output(opt.out, payload);
  } else {
    write_output(opt.out, payload);
  }
  return kExitOk;
}

struct ConcurrenceOpts {
  std::string state_path;
  double normalization = 1.0;
  bool breakdown = false;
  bool pretty = false;
};

int run_concurrence(const ConcurrenceOpts& opt) {
  const PureState psi = load_state(opt.state_path);
  const ConcurrenceBreakdown b = concurrence_general(psi, opt.normalization);
  if (opt.pretty) {
    std::cout << "C^2 = " << fmt(b.total_squared) << "\nC   = " << fmt(b.total) << '\n';
    if (opt.breakdown) {
      for (const auto& [key, value] : b.w_terms)
        std::cout << "  " << w_term_key(key) << " = " << fmt(value) << '\n';
      for (const auto& [key, value] : b.ghz_terms)
        std::cout << "  " << ghz_term_key(key, psi.shape) << " = " << fmt(value) << '\n';
    }
    return kExitOk;
  }
  if (opt.breakdown) {
    std::cout << to_json(b) << '\n';
  } else {
    std::cout << "{\"c_squared\":" << fmt(b.total_squared) << ",\"c\":" << fmt(b.total) << "}\n";
  }
  return kExitOk;
}

struct WitnessBuildOpts {
  std::string state_path;
  std::string form;
  std::string kind;
  std::optional<double> gamma;
  bool hermitize = false;
  std::string out = "-";
  bool pretty = false;
};

int run_witness_build(const WitnessBuildOpts& opt) {
  const PureState psi = load_state(opt.state_path);
  Witness w = [&] {
    if (opt.form == "canonical") {
      std::string source = "state:" + opt.state_path;
      return canonical_witness(psi, opt.gamma, std::move(source));
    }
    if (opt.kind.empty())
      throw ValidationError("--form operator requires --kind {ghz,w}");
    const TargetKind kind = opt.kind == "ghz" ? TargetKind::kGhz : TargetKind::kW;
    return operator_form_witness(kind, psi.shape.subsystem_count(), opt.hermitize);
  }();
  const std::string payload = to_json(w);
  if (opt.pretty) {
    std::cout << to_string(w.form) << " witness, gamma = " << fmt(w.gamma) << ", dim "
              << w.shape.joint_dim() << '\n';
    if (opt.out != "-") write_output(opt.out, payload);
  } else {
    write_output(opt.out, payload);
  }
  return kExitOk;
}

struct WitnessEvalOpts {
  std::string witness_path;
  std::string input_path;
  bool pretty = false;
};

int run_witness_eval(const WitnessEvalOpts& opt) {
  const Witness w = load_witness(opt.witness_path);
  const auto input = state_or_density_from_json(read_input(opt.input_path));
  Complex value;
  if (std::holds_alternative<PureState>(input)) {
    const PureState& psi = std::get<PureState>(input);
    if (!(psi.shape == w.shape))
      throw DimensionMismatch("witness-eval: witness and state shapes differ");
    value = expectation(w.matrix, psi.amplitudes);
  } else {
    const DensityOperator& rho = std::get<DensityOperator>(input);
    if (!(rho.shape == w.shape))
      throw DimensionMismatch("witness-eval: witness and density shapes differ");
    value = expectation_density(w.matrix, rho.matrix);
  }
  if (opt.pretty) {
    std::cout << "Tr(W rho) = " << fmt(value.real()) << '\n';
    return kExitOk;
  }
  std::cout << "{\"expectation\":" << fmt(value.real()) << ",\"imag\":" << fmt(value.imag())
            << "}\n";
  return kExitOk;
}

struct CertifyOpts {
  std::string witness_path;
  std::string target_path;
  std::size_t restarts = 50;
  std::size_t max_sweeps = 500;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool pretty = false;
};

int run_certify(const CertifyOpts& opt) {
  const Witness w = load_witness(opt.witness_path);
  const PureState target = load_state(opt.target_path);
  SeesawConfig cfg;
  cfg.restarts = opt.restarts;
  cfg.max_sweeps = opt.max_sweeps;
  cfg.seed = opt.seed;
  const CertificationReport report = certify_witness(w, target, cfg);

  std::optional<double> probe;
  if (opt.samples > 0) probe = positivity_probe(w, opt.samples, opt.seed);

  if (opt.pretty) {
    std::cout << "min product expectation = " << fmt(report.min_product_expectation) << '\n'
              << "detection value         = " << fmt(report.detection_value) << '\n'
              << "valid witness: " << (report.is_valid_witness ? "yes" : "no")
              << ", detects target: " << (report.detects_target ? "yes" : "no") << '\n';
    if (probe) std::cout << "probe minimum (" << opt.samples << " samples) = " << fmt(*probe) << '\n';
    if (!report.converged) std::cout << "warning: see-saw budget exhausted\n";
  } else {
    std::string payload = to_json(report, w.shape);
    if (probe) {
      payload.pop_back();  // strip closing brace to append probe fields
      payload += ",\"probe_min_expectation\":";
      payload += fmt(*probe);
      payload += ",\"probe_samples\":";
      payload += std::to_string(opt.samples);
      payload += '}';
    }
    std::cout << payload << '\n';
  }
  if (!report.converged) {
    std::cerr << "{\"error\":\"NoConvergence\",\"message\":\"see-saw sweep budget exhausted before "
                 "tolerance was met\"}\n";
    return kExitNoConvergence;
  }
  return kExitOk;
}

struct CompareOpts {
  std::string a_path;
  std::string b_path;
  bool pretty = false;
};

int run_compare(const CompareOpts& opt) {
  const Witness a = load_witness(opt.a_path);
  const Witness b = load_witness(opt.b_path);
  const DiscrepancyReport report = compare_witnesses(a, b);
  if (opt.pretty) {
    std::cout << "max |A - B| = " << fmt(report.max_abs_diff) << " over "
              << report.positions.size() << " differing entries\n"
              << "A Hermitian: " << (report.a_hermitian ? "yes" : "no")
              << ", B Hermitian: " << (report.b_hermitian ? "yes" : "no") << '\n';
    return kExitOk;
  }
  std::cout << to_json(report) << '\n';
  return kExitOk;
}

struct NoiseThresholdOpts {
  std::string witness_path;
  std::string target_path;
  bool pretty = false;
};

int run_noise_threshold(const NoiseThresholdOpts& opt) {
  const Witness w = load_witness(opt.witness_path);
  const PureState target = load_state(opt.target_path);
  const double p_star = noise_threshold(w, target);
  if (opt.pretty) {
    std::cout << "p* = " << fmt(p_star) << " (mixture detected for p > p*)\n";
    return kExitOk;
  }
  std::cout << "{\"p_star\":" << fmt(p_star) << "}\n";
  return kExitOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"entanglement witness construction, concurrence, and certification toolkit"};
  app.require_subcommand(1);

  StateMakeOpts state_opt;
  CLI::App* state = app.add_subcommand("state", "construct named states");
  CLI::App* state_make = state->add_subcommand("make", "write a GHZ or W state as JSON");
  state_make->add_option("--kind", state_opt.kind, "state family")
      ->required()
      ->check(CLI::IsMember({"ghz", "w"}));
  state_make->add_option("--qubits", state_opt.qubits, "qubit count")->required();
  state_make->add_option("--out", state_opt.out, "output path, - for stdout");
  state_make->add_flag("--pretty", state_opt.pretty, "human-readable summary");
  state->require_subcommand(1);

  ConcurrenceOpts conc_opt;
  CLI::App* conc = app.add_subcommand("concurrence", "evaluate concurrence of a state");
  conc->add_option("state", conc_opt.state_path, "state JSON path, - for stdin")->required();
  conc->add_option("--normalization", conc_opt.normalization, "normalization multiplier");
  conc->add_flag("--breakdown", conc_opt.breakdown, "include per-term breakdown");
  conc->add_flag("--pretty", conc_opt.pretty, "human-readable summary");

  WitnessBuildOpts build_opt;
  CLI::App* build = app.add_subcommand("witness-build", "construct a witness for a state");
  build->add_option("state", build_opt.state_path, "target state JSON path, - for stdin")
      ->required();
  build->add_option("--form", build_opt.form, "witness form")
      ->required()
      ->check(CLI::IsMember({"canonical", "operator"}));
  build->add_option("--kind", build_opt.kind, "target family for operator form")
      ->check(CLI::IsMember({"ghz", "w"}));
  double gamma_flag = 0.0;
  CLI::Option* gamma_opt =
      build->add_option("--gamma", gamma_flag, "override gamma (canonical form)");
  build->add_flag("--hermitize", build_opt.hermitize, "symmetrize the operator form");
  build->add_option("--out", build_opt.out, "output path, - for stdout");
  build->add_flag("--pretty", build_opt.pretty, "human-readable summary");

  WitnessEvalOpts eval_opt;
  CLI::App* eval = app.add_subcommand("witness-eval", "expectation of a witness on a state");
  eval->add_option("witness", eval_opt.witness_path, "witness JSON path, - for stdin")->required();
  eval->add_option("input", eval_opt.input_path, "state or density JSON path, - for stdin")
      ->required();
  eval->add_flag("--pretty", eval_opt.pretty, "human-readable summary");

  CertifyOpts cert_opt;
  CLI::App* cert = app.add_subcommand("certify", "certify the two witness conditions");
  cert->add_option("witness", cert_opt.witness_path, "witness JSON path, - for stdin")->required();
  cert->add_option("--target", cert_opt.target_path, "target state JSON path")->required();
  cert->add_option("--restarts", cert_opt.restarts, "see-saw restarts");
  cert->add_option("--max-sweeps", cert_opt.max_sweeps, "see-saw sweep budget per restart");
  cert->add_option("--seed", cert_opt.seed, "base RNG seed");
  cert->add_option("--samples", cert_opt.samples, "extra positivity-probe sample count");
  cert->add_flag("--pretty", cert_opt.pretty, "human-readable summary");

  CompareOpts cmp_opt;
  CLI::App* cmp = app.add_subcommand("compare", "entrywise discrepancy of two witnesses");
  cmp->add_option("a", cmp_opt.a_path, "first witness JSON path")->required();
  cmp->add_option("b", cmp_opt.b_path, "second witness JSON path")->required();
  cmp->add_flag("--pretty", cmp_opt.pretty, "human-readable summary");

  NoiseThresholdOpts noise_opt;
  CLI::App* noise = app.add_subcommand("noise-threshold", "white-noise detection threshold");
  noise->add_option("witness", noise_opt.witness_path, "witness JSON path, - for stdin")
      ->required();
  noise->add_option("--target", noise_opt.target_path, "target state JSON path")->required();
  noise->add_flag("--pretty", noise_opt.pretty, "human-readable summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    std::cerr << "{\"error\":\"ValidationError\",\"message\":\"" << json_escape(e.what())
              << "\"}\n";
    return kExitValidation;
  }

  if (state_make->parsed()) return run_state_make(state_opt);
  if (conc->parsed()) return run_concurrence(conc_opt);
  if (build->parsed()) {
    if (gamma_opt->count() > 0) build_opt.gamma = gamma_flag;
    return run_witness_build(build_opt);
  }
  if (eval->parsed()) return run_witness_eval(eval_opt);
  if (cert->parsed()) return run_certify(cert_opt);
  if (cmp->parsed()) return run_compare(cmp_opt);
  if (noise->parsed()) return run_noise_threshold(noise_opt);
  return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const NoConvergence& e) {
    std::cerr << "{\"error\":\"NoConvergence\",\"message\":\"" << json_escape(e.what()) << "\"}\n";
    return kExitNoConvergence;
  } catch (const NoDetection& e) {
    std::cerr << "{\"error\":\"NoDetection\",\"message\":\"" << json_escape(e.what()) << "\"}\n";
    return kExitNoDetection;
  } catch (const Error& e) {
    std::cerr << "{\"error\":\"" << e.code() << "\",\"message\":\"" << json_escape(e.what())
              << "\"}\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"internal\",\"message\":\"" << json_escape(e.what()) << "\"}\n";
    return kExitValidation;
  }
}
