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

#ifndef MSQSP_SIMULATOR_HPP
#define MSQSP_SIMULATOR_HPP

#include <span>

#include <Eigen/Dense>

#include "msqsp/circuit.hpp"

namespace msqsp {

/*
 * Dense statevector over n qubits. Qubit k is bit k of the basis index
 * (little endian), so for two qubits the index is 2 * b_1 + b_0.
 */
class StateVector {
 public:
  explicit StateVector(int num_qubits);  // |0...0>
  StateVector(int num_qubits, Eigen::VectorXcd amplitudes);

  static StateVector basis(int num_qubits, Eigen::Index index);

  int num_qubits() const { return num_qubits_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  double norm() const { return amps_.norm(); }

  void apply(const Gate& gate);

 private:
  int num_qubits_;
  Eigen::VectorXcd amps_;
};

void apply_gate(StateVector& state, const Gate& gate);

/// 2x2 kernel on one qubit of a 2^n amplitude vector.
void apply_single_qubit(Eigen::Ref<Eigen::VectorXcd> amps, int qubit,
                        const Eigen::Matrix2cd& u);

/// MS(tau) as H^n . diag(exp(-i tau (n - 2 popcount)^2 / 4)) . H^n.
void apply_ms(Eigen::Ref<Eigen::VectorXcd> amps, int num_qubits, double tau);

/// Largest register circuit_unitary accepts.
inline constexpr int kMaxUnitaryQubits = 14;

/// Column j is the circuit applied to basis state j.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

/// Identity except R_z(alpha) on `target` when every other qubit is |1>.
Eigen::MatrixXcd ideal_crot(int num_qubits, double alpha, int target = 0);

/// R_x(alphas[q]) on qubit 0 when the other qubits have Hamming weight q.
Eigen::MatrixXcd ideal_weighted_x(int num_qubits, std::span<const double> alphas);

/// X on qubit 0 when qubits 1..n-1 are all |1>.
Eigen::MatrixXcd ideal_toffoli(int n);

/// 1 - |tr(U^dagger V)| / dim; zero iff U = e^{i phi} V.
double phase_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

struct AncillaProjection {
  Eigen::MatrixXcd block;  // acts on the remaining qubits, order preserved
  double leakage;          // max over columns of 1 - ||column||
};

/// Block of U with the ancilla fixed to `bit` on input and output.
AncillaProjection project_ancilla(const Eigen::MatrixXcd& u, int ancilla, int bit);

struct BlockReport {
  double off_block;        // largest |U_ij| coupling different control strings
  double non_phase;        // largest deviation from a phase in inactive blocks
};

/// Checks that U only acts on `target` within each control bitstring, and
/// that blocks other than all-ones controls are multiples of the identity.
BlockReport analyze_blocks(const Eigen::MatrixXcd& u, int target);

/// 2x2 target block of U for a given control bitstring (target bit ignored).
Eigen::Matrix2cd target_block(const Eigen::MatrixXcd& u, int target,
                              Eigen::Index controls);

}  // namespace msqsp

#endif  // MSQSP_SIMULATOR_HPP
