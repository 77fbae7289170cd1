// Copyright 2026 The msqsp Authors
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

#ifndef MSQSP_ERRORS_HPP
#define MSQSP_ERRORS_HPP

#include <limits>
#include <stdexcept>
#include <string>

namespace msqsp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A qubit count, degree or index outside its admissible range.
class InvalidSize : public Error {
 public:
  using Error::Error;
};

/// Input whose parity or symmetry contradicts what the caller asked for.
class InconsistentInput : public Error {
 public:
  using Error::Error;
};

/// The constraint system for a series could not be solved, or its solution
/// violates the bound |A| <= 1 (resp. A^2 + B^2 <= 1).
class FittingFailed : public Error {
 public:
  FittingFailed(const std::string& what, double theta)
      : Error(what), theta_(theta) {}
  explicit FittingFailed(const std::string& what) : Error(what) {}

  /// Offending angle, or NaN when the failure is not tied to one point.
  double theta() const { return theta_; }

 private:
  double theta_ = std::numeric_limits<double>::quiet_NaN();
};

class CompletionFailed : public Error {
 public:
  CompletionFailed(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class ExtractionFailed : public Error {
 public:
  ExtractionFailed(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Raised when a circuit would leave control-dependent Ising phases behind.
class PhaseResetViolation : public Error {
 public:
  using Error::Error;
};

/// Raised by the simulator when a register is too large for dense unitaries.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

// Circuit deserialization failures, one type per failure mode.
class MalformedCircuit : public Error {
 public:
  using Error::Error;
};

class UnknownGateType : public Error {
 public:
  explicit UnknownGateType(const std::string& gate)
      : Error("unknown gate type \"" + gate + "\""), gate_(gate) {}
  const std::string& gate() const { return gate_; }

 private:
  std::string gate_;
};

class QubitIndexOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace msqsp

#endif  // MSQSP_ERRORS_HPP
