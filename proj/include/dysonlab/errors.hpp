// Copyright 2026 The dysonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dysonlab {

/// Base of every error raised by the library. The CLI maps the concrete
/// type onto its exit-status contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (r <= 0, x <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition (unnormalized profile, non-PSD matrix, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not, or a guaranteed inequality failed.
/// Always indicates a bug upstream, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Requested problem exceeds a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Discretization or truncation did not reach the requested accuracy.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// An iterative method ran out of budget. Carries whatever it had.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double partial_value, double residual)
      : Error(what), partial_value_(partial_value), residual_(residual) {}

  double partial_value() const noexcept { return partial_value_; }
  double residual() const noexcept { return residual_; }

 private:
  double partial_value_;
  double residual_;
};

/// Malformed command line, config key, or input file.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace dysonlab
