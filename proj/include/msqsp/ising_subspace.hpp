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

#ifndef MSQSP_ISING_SUBSPACE_HPP
#define MSQSP_ISING_SUBSPACE_HPP

#include <vector>

#include <Eigen/Dense>

namespace msqsp {

/// Per-pulse parameters: MS angle tau and the target-qubit X rotation h.
struct PulseParams {
  double tau;
  double h;
};

/// (tau, h) = (pi/N, -pi/N), spreading the effective angles uniformly over
/// the circle with the all-ones control state landing on theta = pi.
PulseParams default_params(int num_qubits);

/// Energy gap E_0 - E_1 of the target within a control subspace of Hamming
/// weight q, in units of J: N - 1 - 2q.
double energy_gap(int num_qubits, int weight);

struct SpectrumLevel {
  int target_bit;
  int weight;
  int multiplicity;  // number of control bitstrings with this weight
  double energy;
};

/// Eigensystem of the star-coupled Ising Hamiltonian, one entry per
/// (target bit, control weight) pair, ordered by target bit then weight.
std::vector<SpectrumLevel> star_spectrum(int num_qubits);

/// theta_q = (N - 1 - 2q) tau + h for q = 0..N-1 (not reduced).
Eigen::VectorXd compute_thetas(int num_qubits, double tau, double h);

/// True when tau * num_pulses is a multiple of 2pi, i.e. all pairwise Ising
/// phases return to identity after the pulse train.
bool phase_reset_ok(int num_qubits, int num_pulses, double tau);

/// Angle reduced to (-pi, pi].
double canonical_angle(double theta);

/// Reduced effective dynamics of an N-qubit MS pulse train seen by the target.
class SubspaceModel {
 public:
  SubspaceModel(int num_qubits, PulseParams params);
  explicit SubspaceModel(int num_qubits)
      : SubspaceModel(num_qubits, default_params(num_qubits)) {}

  int num_qubits() const { return num_qubits_; }
  double tau() const { return params_.tau; }
  double h() const { return params_.h; }
  PulseParams params() const { return params_; }

  /// J is fixed to one; only tau * gap enters the dynamics.
  static constexpr double coupling() { return 1.0; }

  const Eigen::VectorXd& thetas() const { return thetas_; }
  double theta(int weight) const { return thetas_(weight); }

 private:
  int num_qubits_;
  PulseParams params_;
  Eigen::VectorXd thetas_;
};

}  // namespace msqsp

#endif  // MSQSP_ISING_SUBSPACE_HPP
