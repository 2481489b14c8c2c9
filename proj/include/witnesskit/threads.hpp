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

#ifndef WITNESSKIT_THREADS_HPP_
#define WITNESSKIT_THREADS_HPP_

namespace witnesskit {

/// Thread budget for the OpenMP kernels and for restart/sample loops.
/// Resolution order: set_thread_override() if called with a positive value,
/// then the WITNESSKIT_THREADS environment variable, then the OpenMP default.
int effective_threads();

/// Force a thread count (tests and the benchmark use this). Pass 0 to clear.
void set_thread_override(int threads);

}  // namespace witnesskit

#endif  // WITNESSKIT_THREADS_HPP_
