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

#include "witnesskit/threads.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>

namespace witnesskit {

namespace {

std::atomic<int> g_override{0};

int env_threads() {
  static const int cached = [] {
    const char* raw = std::getenv("WITNESSKIT_THREADS");
    if (raw == nullptr) return 0;
    const long parsed = std::strtol(raw, nullptr, 10);
    if (parsed < 1) return 0;
    return static_cast<int>(parsed);
  }();
  return cached;
}

}  // namespace

int effective_threads() {
  const int forced = g_override.load(std::memory_order_relaxed);
  if (forced > 0) return forced;
  const int from_env = env_threads();
  if (from_env > 0) return from_env;
  return omp_get_max_threads();
}

void set_thread_override(int threads) {
  g_override.store(threads > 0 ? threads : 0, std::memory_order_relaxed);
}

}  // namespace witnesskit
