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

// Times each data-parallel kernel against its serial reference on dense
// random inputs and checks that both produce bitwise-identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "witnesskit/complex_types.hpp"
#include "witnesskit/kernels.hpp"
#include "witnesskit/threads.hpp"

namespace {

using namespace witnesskit;

std::mt19937_64 rng(20260817);

ComplexMatrix random_matrix(std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

ComplexVector random_vector(std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v;
}

double time_best_of(const std::function<void()>& fn, int repetitions) {
  double best = 1e300;
  for (int i = 0; i < repetitions; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
  }
  return best;
}

void report_row(const std::string& name, std::size_t n, double serial_ms, double par_ms,
                bool identical) {
  std::printf("%-14s %6zu %12.3f %12.3f %9.2fx   %s\n", name.c_str(), n, serial_ms, par_ms,
              par_ms > 0.0 ? serial_ms / par_ms : 0.0, identical ? "bitwise-equal" : "MISMATCH");
}

bool equal_matrices(const ComplexMatrix& a, const ComplexMatrix& b) { return a == b; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  int threads = 0;
  int repetitions = 5;
  app.add_option("--threads", threads, "thread count override (0 = library default)");
  app.add_option("--reps", repetitions, "repetitions per measurement (best-of)");
  CLI11_PARSE(app, argc, argv);

  if (threads > 0) set_thread_override(threads);
  std::printf("threads: %d\n", effective_threads());
  std::printf("%-14s %6s %12s %12s %10s\n", "kernel", "n", "serial(ms)", "openmp(ms)", "speedup");

  for (std::size_t n : {256, 512, 1024}) {
    const ComplexMatrix a = random_matrix(n);
    // Kron output is (4n)x(4n); two copies are held for the parity check,
    // so the factor stays small to keep the peak footprint modest.
    const ComplexMatrix b = random_matrix(4);
    const ComplexVector x = random_vector(n);
    ComplexMatrix serial_out, par_out;

    const double kron_serial =
        time_best_of([&] { serial_out = kernels::serial::kron(a, b); }, repetitions);
    const double kron_par =
        time_best_of([&] { par_out = kernels::par::kron(a, b); }, repetitions);
    report_row("kron", n, kron_serial, kron_par, equal_matrices(serial_out, par_out));

    ComplexVector sv, pv;
    const double mv_serial =
        time_best_of([&] { sv = kernels::serial::matvec(a, x); }, repetitions);
    const double mv_par = time_best_of([&] { pv = kernels::par::matvec(a, x); }, repetitions);
    report_row("matvec", n, mv_serial, mv_par, sv == pv);

    const double outer_serial =
        time_best_of([&] { serial_out = kernels::serial::outer(x); }, repetitions);
    const double outer_par =
        time_best_of([&] { par_out = kernels::par::outer(x); }, repetitions);
    report_row("outer", n, outer_serial, outer_par, equal_matrices(serial_out, par_out));

    Complex se, pe;
    const double exp_serial =
        time_best_of([&] { se = kernels::serial::expectation(a, x); }, repetitions);
    const double exp_par =
        time_best_of([&] { pe = kernels::par::expectation(a, x); }, repetitions);
    report_row("expectation", n, exp_serial, exp_par, se == pe);

    const ComplexMatrix rho = random_matrix(n);
    const double tr_serial =
        time_best_of([&] { se = kernels::serial::trace_product(a, rho); }, repetitions);
    const double tr_par =
        time_best_of([&] { pe = kernels::par::trace_product(a, rho); }, repetitions);
    report_row("trace_product", n, tr_serial, tr_par, se == pe);

    // Contract the middle subsystem of a (reduced x 4 x reduced-half) layout.
    kernels::ContractGeometry geom;
    geom.subsystem_dim = 4;
    geom.stride = n / 64;
    geom.reduced_dim = n / 4;
    const ComplexVector weights = random_vector(geom.reduced_dim);
    const double ct_serial = time_best_of(
        [&] { serial_out = kernels::serial::contract(a, weights, geom); }, repetitions);
    const double ct_par =
        time_best_of([&] { par_out = kernels::par::contract(a, weights, geom); }, repetitions);
    report_row("contract", n, ct_serial, ct_par, equal_matrices(serial_out, par_out));
  }
  return 0;
}
