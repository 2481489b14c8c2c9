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

#ifndef WITNESSKIT_ERRORS_HPP_
#define WITNESSKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace witnesskit {

/// Base class for every error thrown by the library. `code()` is a stable
/// machine-readable identifier used by the CLI error stream.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch", msg) {}
};

struct NotHermitian : Error {
  explicit NotHermitian(const std::string& msg) : Error("NotHermitian", msg) {}
};

struct NoConvergence : Error {
  explicit NoConvergence(const std::string& msg) : Error("NoConvergence", msg) {}
};

struct LabelOutOfRange : Error {
  explicit LabelOutOfRange(const std::string& msg) : Error("LabelOutOfRange", msg) {}
};

struct BadArity : Error {
  explicit BadArity(const std::string& msg) : Error("BadArity", msg) {}
};

struct BadProbability : Error {
  explicit BadProbability(const std::string& msg) : Error("BadProbability", msg) {}
};

struct BadPositions : Error {
  explicit BadPositions(const std::string& msg) : Error("BadPositions", msg) {}
};

struct WrongShape : Error {
  explicit WrongShape(const std::string& msg) : Error("WrongShape", msg) {}
};

struct NoDetection : Error {
  explicit NoDetection(const std::string& msg) : Error("NoDetection", msg) {}
};

/// Malformed input files, unknown flags, out-of-range CLI parameters.
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error("ValidationError", msg) {}
};

}  // namespace witnesskit

#endif  // WITNESSKIT_ERRORS_HPP_
