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

#ifndef MSQSP_CIRCUIT_HPP
#define MSQSP_CIRCUIT_HPP

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "msqsp/qsp.hpp"

namespace msqsp {

/// Global Molmer-Sorensen pulse exp(-i tau/4 sum_{j,k} X_j X_k) on every qubit.
struct MsGate {
  double tau;
  friend bool operator==(const MsGate&, const MsGate&) = default;
};

enum class Axis { X, Y, Z };

struct RotationGate {
  Axis axis;
  int qubit;
  double angle;
  friend bool operator==(const RotationGate&, const RotationGate&) = default;
};

struct HadamardGate {
  int qubit;
  friend bool operator==(const HadamardGate&, const HadamardGate&) = default;
};

using Gate = std::variant<MsGate, RotationGate, HadamardGate>;

inline Gate ms(double tau) { return MsGate{tau}; }
inline Gate rx_gate(int qubit, double angle) { return RotationGate{Axis::X, qubit, angle}; }
inline Gate ry_gate(int qubit, double angle) { return RotationGate{Axis::Y, qubit, angle}; }
inline Gate rz_gate(int qubit, double angle) { return RotationGate{Axis::Z, qubit, angle}; }
inline Gate h_gate(int qubit) { return HadamardGate{qubit}; }

/// True when the gate acts on the given qubit (MS acts on all of them).
bool touches(const Gate& gate, int qubit);

class Circuit {
 public:
  explicit Circuit(int num_qubits, int target_qubit = 0,
                   std::vector<int> ancilla_qubits = {});

  int num_qubits() const { return num_qubits_; }
  int target_qubit() const { return target_qubit_; }
  const std::vector<int>& ancilla_qubits() const { return ancillas_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Appends a gate; throws QubitIndexOutOfRange for a bad qubit index.
  Circuit& add(Gate gate);

  std::size_t ms_count() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_;
  int target_qubit_;
  std::vector<int> ancillas_;
  std::vector<Gate> gates_;
};

/*
 * Emits the pulse train for a plan:
 *
 *   H on every control;
 *   for j = L down to 1:  RZ(phi_j), MS(tau), RX(h), RZ(-phi_j)  on the target;
 *   H on every control;  RZ(phi_0) on the target.
 *
 * In operator order each block is R_z(-phi_j) R_x(theta_q) R_z(phi_j), so the
 * target sees evaluate_plan(phis, theta_q) in the weight-q subspace.
 * Throws PhaseResetViolation when tau * L is not a multiple of 2pi.
 */
Circuit build_crot_circuit(const CompilationPlan& plan, int rotation_target = 0);

/// Sums runs of RZ on the same qubit that no other gate on that qubit
/// separates; drops rotations that are multiples of 4pi.
Circuit merge_adjacent_rz(const Circuit& circuit);

/// Merged target rotations of build_crot_circuit(plan) in time order:
/// phi_L, phi_{L-1} - phi_L, ..., phi_1 - phi_2, phi_0 - phi_1.
std::vector<double> merged_angles(const CompilationPlan& plan);

/// H on controls, RZ(m_0), then [MS(tau), RX(h), RZ(m_j)] for j = 1..2N,
/// H on controls. `merged` must hold 2N + 1 angles; m_0 is applied first.
Circuit build_from_merged(int num_qubits, double tau, double h,
                          std::span<const double> merged);

/// Toffoli on n qubits (target 0, controls 1..n-1) plus one ancilla (qubit n)
/// that serves as the rotation target of a compiled C^n R_z(2pi).
Circuit build_toffoli_circuit(int n);

/// Canonical JSON form (version 1), angles written with 17 significant digits.
std::string serialize(const Circuit& circuit);
Circuit deserialize(std::string_view text);

/// One gate per line: "ms <tau>", "rz <qubit> <angle>", "h <qubit>", ...
std::string to_text(const Circuit& circuit);

}  // namespace msqsp

#endif  // MSQSP_CIRCUIT_HPP
