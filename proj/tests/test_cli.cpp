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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "witnesskit/json_io.hpp"
#include "witnesskit/states.hpp"

using namespace witnesskit;
using nlohmann::json;

#ifndef WITNESSKIT_CLI_PATH
#error "WITNESSKIT_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs a shell command, capturing stdout; stderr is dropped unless the
// command redirects it itself.
RunResult run(const std::string& command) {
  const bool redirects_stderr = command.find("2>") != std::string::npos;
  const std::string wrapped = redirects_stderr ? command : command + " 2>/dev/null";
  FILE* pipe = popen(wrapped.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(out)};
}

const std::string cli = WITNESSKIT_CLI_PATH;

// Scratch directory shared by the cases; recreated per process.
struct Scratch {
  std::filesystem::path dir;
  Scratch() {
    dir = std::filesystem::temp_directory_path() /
          ("witnesskit_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string file(const std::string& name, const std::string& content) const {
    const std::filesystem::path p = dir / name;
    std::ofstream(p) << content << '\n';
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

const Scratch& scratch() {
  static Scratch s;
  return s;
}

}  // namespace

TEST_CASE("state make writes a parseable ghz state") {
  const RunResult r = run(cli + " state make --kind ghz --qubits 3 --out -");
  CHECK(r.exit_code == 0);
  const PureState psi = state_from_json(r.out);
  CHECK(psi.shape == SystemShape::qubits(3));
  CHECK(psi.amplitudes == ghz_state(3).amplitudes);
}

TEST_CASE("state make into concurrence pipeline") {
  const RunResult r = run(cli + " state make --kind ghz --qubits 3 --out - | " + cli +
                          " concurrence -");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(std::abs(j.at("c_squared").get<double>() - 0.75) < 1e-12);
  CHECK(std::abs(j.at("c").get<double>() - std::sqrt(0.75)) < 1e-12);

  const RunResult w = run(cli + " state make --kind w --qubits 3 --out - | " + cli +
                          " concurrence -");
  CHECK(std::abs(json::parse(w.out).at("c_squared").get<double>() - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("concurrence breakdown payload carries term keys") {
  const std::string state = scratch().file("w3.json", to_json(w_state(3)));
  const RunResult r = run(cli + " concurrence " + state + " --breakdown");
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("w_terms").contains("W[1,2|1]"));
  CHECK(j.at("ghz_terms").contains("GHZ[111,122]"));
  CHECK(std::abs(j.at("total_squared").get<double>() - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("witness-build then certify") {
  const std::string state = scratch().file("ghz3.json", to_json(ghz_state(3)));
  const std::string witness = scratch().path("ghz3_witness.json");
  const RunResult build = run(cli + " witness-build " + state + " --form canonical --out " + witness);
  CHECK(build.exit_code == 0);

  const RunResult cert =
      run(cli + " certify " + witness + " --target " + state + " --restarts 8 --seed 3");
  CHECK(cert.exit_code == 0);
  const json j = json::parse(cert.out);
  CHECK(std::abs(j.at("min_product_expectation").get<double>() - 0.25) < 1e-7);
  CHECK(std::abs(j.at("detection_value").get<double>() - (-0.25)) < 1e-9);
  CHECK(j.at("is_valid_witness").get<bool>());
  CHECK(j.at("detects_target").get<bool>());
  CHECK(j.at("converged").get<bool>());
  CHECK(j.at("argmin").is_array());
  CHECK(j.at("argmin").size() == 3);
}

TEST_CASE("certify with a probe appends the sampled minimum") {
  const std::string state = scratch().file("ghz3b.json", to_json(ghz_state(3)));
  const std::string witness = scratch().path("ghz3b_witness.json");
  run(cli + " witness-build " + state + " --form canonical --out " + witness);

  const RunResult cert = run(cli + " certify " + witness + " --target " + state +
                             " --restarts 6 --seed 3 --samples 50");
  CHECK(cert.exit_code == 0);
  const json j = json::parse(cert.out);
  CHECK(j.at("probe_samples").get<std::size_t>() == 50);
  CHECK(j.at("probe_min_expectation").get<double>() >=
        j.at("min_product_expectation").get<double>() - 1e-9);
}

TEST_CASE("compare canonical against the operator form") {
  const std::string state = scratch().file("ghz3c.json", to_json(ghz_state(3)));
  const std::string canonical = scratch().path("canonical.json");
  const std::string operator_form = scratch().path("operator.json");
  run(cli + " witness-build " + state + " --form canonical --gamma 0.75 --out " + canonical);
  run(cli + " witness-build " + state + " --form operator --kind ghz --out " +
      operator_form);

  const RunResult r = run(cli + " compare " + canonical + " " + operator_form);
  CHECK(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(std::abs(j.at("max_abs_diff").get<double>() - 1.5) < 1e-12);
  CHECK(j.at("positions").size() == 4);
  CHECK(j.at("a_hermitian").get<bool>());
  CHECK(j.at("b_hermitian").get<bool>());
}

TEST_CASE("witness-eval on states and densities") {
  const std::string state = scratch().file("ghz3d.json", to_json(ghz_state(3)));
  const std::string witness = scratch().path("ghz3d_witness.json");
  run(cli + " witness-build " + state + " --form canonical --gamma 0.75 --out " + witness);

  const RunResult on_state = run(cli + " witness-eval " + witness + " " + state);
  CHECK(on_state.exit_code == 0);
  CHECK(std::abs(json::parse(on_state.out).at("expectation").get<double>() - (-0.25)) < 1e-12);

  const std::string density =
      scratch().file("ghz3_noisy.json", to_json(white_noise_mix(ghz_state(3), 0.5)));
  const RunResult on_density = run(cli + " witness-eval " + witness + " " + density);
  CHECK(on_density.exit_code == 0);
  // At p = 1/2 the expectation sits halfway between -1/4 and 5/8.
  CHECK(std::abs(json::parse(on_density.out).at("expectation").get<double>() - 0.1875) < 1e-12);
}

TEST_CASE("noise-threshold reproduces the closed-form crossing") {
  const std::string state = scratch().file("ghz3e.json", to_json(ghz_state(3)));
  const std::string witness = scratch().path("ghz3e_witness.json");
  run(cli + " witness-build " + state + " --form canonical --gamma 0.75 --out " + witness);

  const RunResult r = run(cli + " noise-threshold " + witness + " --target " + state);
  CHECK(r.exit_code == 0);
  CHECK(std::abs(json::parse(r.out).at("p_star").get<double>() - 5.0 / 7.0) < 1e-12);
}

TEST_CASE("validation failures exit with code 2") {
  const std::string broken = scratch().file("broken.json", "{\"dims\":[2,2]");
  const RunResult parse_fail = run(cli + " concurrence " + broken);
  CHECK(parse_fail.exit_code == 2);
  CHECK(parse_fail.out.empty());

  const RunResult cap = run(cli + " state make --kind ghz --qubits 13");
  CHECK(cap.exit_code == 2);

  const RunResult missing = run(cli + " concurrence " + scratch().path("no_such_file.json"));
  CHECK(missing.exit_code == 2);

  // Shape mismatch between witness and input.
  const std::string state2 = scratch().file("ghz2.json", to_json(ghz_state(2)));
  const std::string state3 = scratch().file("ghz3f.json", to_json(ghz_state(3)));
  const std::string witness = scratch().path("ghz2_witness.json");
  run(cli + " witness-build " + state2 + " --form canonical --out " + witness);
  const RunResult mismatch = run(cli + " witness-eval " + witness + " " + state3);
  CHECK(mismatch.exit_code == 2);
}

TEST_CASE("validation errors land on stderr as json") {
  const std::string broken = scratch().file("broken2.json", "nonsense");
  const RunResult r = run(cli + " concurrence " + broken + " 2>&1");
  CHECK(r.exit_code == 2);
  const json j = json::parse(r.out);
  CHECK(j.at("error").get<std::string>() == "ValidationError");
  CHECK(!j.at("message").get<std::string>().empty());
}

TEST_CASE("an exhausted sweep budget exits with code 3") {
  const std::string state = scratch().file("w3b.json", to_json(w_state(3)));
  const std::string witness = scratch().path("w3b_witness.json");
  run(cli + " witness-build " + state + " --form canonical --out " + witness);

  const RunResult r = run(cli + " certify " + witness + " --target " + state +
                          " --restarts 4 --seed 1 --max-sweeps 0");
  CHECK(r.exit_code == 3);
  // The report is still written before the failure is signalled.
  const json j = json::parse(r.out);
  CHECK(!j.at("converged").get<bool>());
}

TEST_CASE("a witness that cannot detect the target exits with code 4") {
  const std::string ghz = scratch().file("ghz3g.json", to_json(ghz_state(3)));
  const std::string w3 = scratch().file("w3c.json", to_json(w_state(3)));
  const std::string witness = scratch().path("cross_witness.json");
  run(cli + " witness-build " + ghz + " --form canonical --gamma 0.75 --out " + witness);

  const RunResult r = run(cli + " noise-threshold " + witness + " --target " + w3);
  CHECK(r.exit_code == 4);
  CHECK(r.out.empty());
}

TEST_CASE("repeated invocations are byte identical") {
  const std::string state = scratch().file("ghz3h.json", to_json(ghz_state(3)));
  const std::string witness = scratch().path("ghz3h_witness.json");
  run(cli + " witness-build " + state + " --form canonical --out " + witness);

  const std::string command =
      cli + " certify " + witness + " --target " + state + " --restarts 6 --seed 11";
  const RunResult first = run(command);
  const RunResult second = run(command);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(!first.out.empty());

  const RunResult make_a = run(cli + " state make --kind w --qubits 5 --out -");
  const RunResult make_b = run(cli + " state make --kind w --qubits 5 --out -");
  CHECK(make_a.out == make_b.out);
}

TEST_CASE("pretty mode prints a human summary instead of json") {
  const std::string state = scratch().file("ghz3i.json", to_json(ghz_state(3)));
  const RunResult r = run(cli + " concurrence " + state + " --pretty");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("C^2 = ") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("help is printed and exits cleanly") {
  const RunResult r = run(cli + " --help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("certify") != std::string::npos);
  CHECK(r.out.find("noise-threshold") != std::string::npos);
}
