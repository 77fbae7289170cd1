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

#include "msqsp/ising_subspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "msqsp/errors.hpp"

namespace msqsp {

namespace {

void require_qubits(int num_qubits) {
  if (num_qubits < 2) {
    throw InvalidSize("need at least 2 qubits, got " +
                      std::to_string(num_qubits));
  }
}

int binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

}  // namespace

PulseParams default_params(int num_qubits) {
  require_qubits(num_qubits);
  const double step = std::numbers::pi / num_qubits;
  return {step, -step};
}

double energy_gap(int num_qubits, int weight) {
  require_qubits(num_qubits);
  if (weight < 0 || weight > num_qubits - 1) {
    throw InvalidSize("Hamming weight " + std::to_string(weight) +
                      " out of range for " + std::to_string(num_qubits) +
                      " qubits");
  }
  return SubspaceModel::coupling() * (num_qubits - 1 - 2 * weight);
}

std::vector<SpectrumLevel> star_spectrum(int num_qubits) {
  require_qubits(num_qubits);
  std::vector<SpectrumLevel> levels;
  levels.reserve(2 * num_qubits);
  const double half = 0.5 * (num_qubits - 1);
  for (int bit = 0; bit <= 1; ++bit) {
    for (int q = 0; q < num_qubits; ++q) {
      const double e = SubspaceModel::coupling() * (half - q);
      levels.push_back({bit, q, binomial(num_qubits - 1, q), bit == 0 ? e : -e});
    }
  }
  return levels;
}

Eigen::VectorXd compute_thetas(int num_qubits, double tau, double h) {
  require_qubits(num_qubits);
  Eigen::VectorXd thetas(num_qubits);
  for (int q = 0; q < num_qubits; ++q) {
    thetas(q) = (num_qubits - 1 - 2 * q) * tau + h;
  }
  return thetas;
}

bool phase_reset_ok(int /*num_qubits*/, int num_pulses, double tau) {
  if (num_pulses < 0) throw InvalidSize("negative pulse count");
  const double turns = tau * num_pulses / (2 * std::numbers::pi);
  return std::abs(turns - std::round(turns)) <= 1e-12 * std::max(1.0, std::abs(turns));
}

double canonical_angle(double theta) {
  double r = std::remainder(theta, 2 * std::numbers::pi);
  if (r <= -std::numbers::pi) r += 2 * std::numbers::pi;
  return r;
}

SubspaceModel::SubspaceModel(int num_qubits, PulseParams params)
    : num_qubits_(num_qubits),
      params_(params),
      thetas_(compute_thetas(num_qubits, params.tau, params.h)) {}

}  // namespace msqsp
