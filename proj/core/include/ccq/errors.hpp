// Copyright 2026 The ccqsim authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ccq {

// Process exit codes shared with the command line tools.
enum class ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kParameterError = 2,
  kNumericalFailure = 3,
};

class Error : public std::runtime_error {
 public:
  Error(const std::string& what, ExitCode code) : std::runtime_error(what), code_(code) {}
  ExitCode exit_code() const { return code_; }

 private:
  ExitCode code_;
};

/// A value or file violates an invariant (Hermiticity, completeness, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what, ExitCode::kValidationFailure) {}
};

/// Arguments outside the documented domain (shape mismatches, bad ranges).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(what, ExitCode::kParameterError) {}
};

/// A requested operation would exceed the configured dimension cap.
class DimensionLimitError : public ParameterError {
 public:
  explicit DimensionLimitError(const std::string& what) : ParameterError(what) {}
};

/// An iterative numerical routine failed to converge.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(what, ExitCode::kNumericalFailure) {}
};

}  // namespace ccq
