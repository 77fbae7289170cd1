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


#include "msqsp/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "msqsp/errors.hpp"
#include "msqsp/qsp.hpp"
#include "msqsp/simulator.hpp"

namespace msqsp {
namespace {

constexpr double kPi = std::numbers::pi;

int count_rotations(const Circuit& c, Axis axis) {
  int n = 0;
  for (const Gate& g : c.gates()) {
    if (const auto* r = std::get_if<RotationGate>(&g); r && r->axis == axis) ++n;
  }
  return n;
}

int count_h(const Circuit& c) {
  int n = 0;
  for (const Gate& g : c.gates()) n += std::holds_alternative<HadamardGate>(g);
  return n;
}

TEST(BuildCrotCircuit, EmptyPlan) {
  const CompilationPlan plan{3, kPi / 3, -kPi / 3, {0.4}};
  const Circuit c = build_crot_circuit(plan);
  EXPECT_EQ(c.ms_count(), 0u);
  EXPECT_EQ(count_h(c), 4);
  EXPECT_EQ(count_rotations(c, Axis::Z), 1);
}

TEST(BuildCrotCircuit, StructuralCounts) {
  for (int n = 2; n <= 6; ++n) {
    const CompilationPlan plan = crot_angles(n, 1.2);
    const Circuit c = build_crot_circuit(plan);
    const int l = plan.num_pulses();
    EXPECT_EQ(c.ms_count(), static_cast<std::size_t>(2 * n));
    EXPECT_EQ(count_h(c), 2 * (n - 1));
    EXPECT_EQ(count_rotations(c, Axis::X), l);
    EXPECT_EQ(count_rotations(c, Axis::Z), 2 * l + 1);
    EXPECT_EQ(c.num_qubits(), n);
    EXPECT_EQ(c.target_qubit(), 0);
  }
  EXPECT_EQ(build_crot_circuit(crot_angles(3, kPi)).ms_count(), 6u);
}

TEST(BuildCrotCircuit, RefusesPlanWithoutPhaseReset) {
  const CompilationPlan plan{3, kPi / 3, -kPi / 3, {0.1, 0.2, 0.3, 0.4, 0.5}};
  EXPECT_THROW(build_crot_circuit(plan), PhaseResetViolation);
}

TEST(BuildCrotCircuit, OtherTargetQubit) {
  const CompilationPlan plan = crot_angles(3, 0.9);
  const Circuit c = build_crot_circuit(plan, 2);
  EXPECT_LE(phase_distance(circuit_unitary(c), ideal_crot(3, 0.9, 2)), 1e-10);
}

TEST(MergeAdjacentRz, SumsRuns) {
  Circuit c(2);
  c.add(rz_gate(0, 0.3)).add(rz_gate(0, 0.4));
  const Circuit m = merge_adjacent_rz(c);
  ASSERT_EQ(m.gates().size(), 1u);
  EXPECT_NEAR(std::get<RotationGate>(m.gates()[0]).angle, 0.7, 1e-15);
}

TEST(MergeAdjacentRz, MergesAcrossDisjointGate) {
  Circuit c(2);
  c.add(rz_gate(0, 0.3)).add(h_gate(1)).add(rz_gate(0, 0.4));
  const Circuit m = merge_adjacent_rz(c);
  EXPECT_EQ(count_rotations(m, Axis::Z), 1);
  EXPECT_EQ(count_h(m), 1);
  EXPECT_LE(phase_distance(circuit_unitary(m), circuit_unitary(c)), 1e-15);
}

TEST(MergeAdjacentRz, StopsAtGatesOnSameQubit) {
  Circuit c(1);
  c.add(rz_gate(0, 0.3)).add(rx_gate(0, 0.1)).add(rz_gate(0, 0.4));
  EXPECT_EQ(count_rotations(merge_adjacent_rz(c), Axis::Z), 2);
}

TEST(MergeAdjacentRz, DropsFullTurns) {
  Circuit c(1);
  c.add(rz_gate(0, 3 * kPi)).add(rz_gate(0, kPi));
  EXPECT_TRUE(merge_adjacent_rz(c).gates().empty());
}

TEST(MergeAdjacentRz, CrotHasTwoNPlusOneSlots) {
  for (int n = 2; n <= 6; ++n) {
    const Circuit m = merge_adjacent_rz(build_crot_circuit(crot_angles(n, 0.8)));
    EXPECT_LE(count_rotations(m, Axis::Z), 2 * n + 1);
  }
  const Circuit m3 = merge_adjacent_rz(build_crot_circuit(crot_angles(3, -kPi)));
  EXPECT_EQ(count_rotations(m3, Axis::Z), 7);
  EXPECT_EQ(merged_angles(crot_angles(3, -kPi)).size(), 7u);
}

TEST(MergeAdjacentRz, PreservesUnitary) {
  for (int n = 2; n <= 8; ++n) {
    for (double alpha : {0.3, kPi, 2 * kPi}) {
      const Circuit c = build_crot_circuit(crot_angles(n, alpha));
      const Circuit m = merge_adjacent_rz(c);
      EXPECT_LE(phase_distance(circuit_unitary(m), circuit_unitary(c)), 1e-12);
    }
  }
}

TEST(BuildFromMerged, MatchesUnmergedCircuit) {
  for (int n = 2; n <= 7; ++n) {
    const CompilationPlan plan = crot_angles(n, 1.9);
    const std::vector<double> merged = merged_angles(plan);
    ASSERT_EQ(merged.size(), static_cast<std::size_t>(2 * n + 1));
    const Circuit a = build_from_merged(n, plan.tau, plan.h, merged);
    const Circuit b = build_crot_circuit(plan);
    EXPECT_EQ(a.ms_count(), static_cast<std::size_t>(2 * n));
    EXPECT_EQ(count_rotations(a, Axis::Z), 2 * n + 1);
    EXPECT_LE(phase_distance(circuit_unitary(a), circuit_unitary(b)), 1e-12);
  }
}

TEST(BuildFromMerged, WrongLengthRejected) {
  const std::vector<double> angles(6, 0.0);
  EXPECT_THROW(build_from_merged(3, kPi / 3, -kPi / 3, angles), InvalidSize);
}

TEST(BuildFromMerged, ReferenceThreeQubitRow) {
  const std::vector<double> row = {-1.855, -2.118, -0.525, -2.118, -1.855, -kPi, 0.0};
  const Circuit c = build_from_merged(3, kPi / 3, -kPi / 3, row);
  EXPECT_LE(phase_distance(circuit_unitary(c), ideal_crot(3, -kPi)), 1e-2);
}

TEST(BuildFromMerged, ReferenceSixQubitRow) {
  // The trailing phase-reset angle is zero.
  const std::vector<double> row = {-2.745, -0.79,  1.146, -1.155, 0.81, 2.312, 0.81,
                                   -1.155, 1.146, -0.79, -2.745, -kPi, 0.0};
  const Circuit c = build_from_merged(6, kPi / 6, -kPi / 6, row);
  EXPECT_LE(phase_distance(circuit_unitary(c), ideal_crot(6, -kPi)), 1e-2);
}

TEST(Toffoli, TwoQubitsIsCnot) {
  const Circuit c = build_toffoli_circuit(2);
  EXPECT_EQ(c.num_qubits(), 3);
  EXPECT_EQ(c.ancilla_qubits(), std::vector<int>{2});
  const AncillaProjection p = project_ancilla(circuit_unitary(c), 2, 0);
  EXPECT_LE(p.leakage, 1e-10);
  Eigen::MatrixXcd cnot = Eigen::MatrixXcd::Zero(4, 4);
  // Control is qubit 1, target qubit 0: swap |10> (index 2) and |11> (index 3).
  cnot(0, 0) = cnot(1, 1) = 1.0;
  cnot(2, 3) = cnot(3, 2) = 1.0;
  EXPECT_LE(phase_distance(p.block, cnot), 1e-10);
}

TEST(Toffoli, MatchesIdealAndCountsPulses) {
  for (int n = 2; n <= 5; ++n) {
    const Circuit c = build_toffoli_circuit(n);
    EXPECT_EQ(c.ms_count(), static_cast<std::size_t>(2 * (n + 1)));
    const AncillaProjection p = project_ancilla(circuit_unitary(c), n, 0);
    EXPECT_LE(p.leakage, 1e-10);
    EXPECT_LE(phase_distance(p.block, ideal_toffoli(n)), 1e-6);
  }
  EXPECT_EQ(build_toffoli_circuit(4).ms_count(), 10u);
  EXPECT_THROW(build_toffoli_circuit(1), InvalidSize);
}

TEST(InvertPlan, CircuitIsAdjoint) {
  const CompilationPlan plan = crot_angles(3, kPi);
  const Eigen::MatrixXcd u = circuit_unitary(build_crot_circuit(plan));
  const Eigen::MatrixXcd v = circuit_unitary(build_crot_circuit(invert_plan(plan)));
  EXPECT_LE(phase_distance(v, u.adjoint()), 1e-9);
  const Eigen::MatrixXcd w =
      circuit_unitary(build_crot_circuit(invert_plan(invert_plan(plan))));
  EXPECT_LE(phase_distance(w, u), 1e-9);

  // The identity plan maps to a plan with the same unitary; its angles are
  // shifted by pi, which turns each R_x(theta) into R_x(-theta).
  const CompilationPlan id = crot_angles(3, 0.0);
  const Eigen::MatrixXcd id_inv = circuit_unitary(build_crot_circuit(invert_plan(id)));
  EXPECT_LE(phase_distance(id_inv, Eigen::MatrixXcd::Identity(8, 8)), 1e-12);
}

TEST(WeightedCircuit, TwoQubitsIdentityAndFlip) {
  const std::vector<double> alphas = {0.0, kPi};
  const Circuit c = build_crot_circuit(weighted_plan(2, alphas));
  const Eigen::MatrixXcd u = circuit_unitary(c);
  EXPECT_LE(phase_distance(u, ideal_weighted_x(2, alphas)), 1e-9);
  const std::complex<double> phase = u(0, 0);
  EXPECT_NEAR(std::abs(phase), 1.0, 1e-9);
  EXPECT_LE((target_block(u, 0, 0) - phase * Eigen::Matrix2cd::Identity()).norm(), 1e-8);
  EXPECT_LE((target_block(u, 0, 2) - phase * rx(kPi)).norm(), 1e-8);
}

TEST(WeightedCircuit, EqualAnglesAreUncontrolled) {
  const double alpha = 0.77;
  const std::vector<double> alphas(3, alpha);
  const Circuit c = build_crot_circuit(weighted_plan(3, alphas));
  EXPECT_LE(c.ms_count(), 12u);
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(8, 8);
  for (int blk = 0; blk < 8; blk += 2) want.block<2, 2>(blk, blk) = rx(alpha);
  EXPECT_LE(phase_distance(circuit_unitary(c), want), 1e-9);
}

TEST(Serialization, RoundTrip) {
  for (const Circuit& c : {build_crot_circuit(crot_angles(4, 1.234567890123)),
                           build_toffoli_circuit(3), Circuit(1)}) {
    EXPECT_EQ(deserialize(serialize(c)), c);
  }
  Circuit y(2, 1);
  y.add(Gate(RotationGate{Axis::Y, 0, -0.1})).add(ms(0.25));
  EXPECT_EQ(deserialize(serialize(y)), y);
}

TEST(Serialization, EmptyCircuitIsIdentity) {
  const Circuit c = deserialize(
      R"({"version": 1, "num_qubits": 1, "target_qubit": 0, "ancilla_qubits": [], "gates": []})");
  EXPECT_EQ(c.num_qubits(), 1);
  EXPECT_TRUE(c.gates().empty());
  EXPECT_LE((circuit_unitary(c) - Eigen::MatrixXcd::Identity(2, 2)).norm(), 0.0);
}

TEST(Serialization, UnknownGateNamed) {
  const std::string text =
      R"({"version": 1, "num_qubits": 2, "target_qubit": 0, "ancilla_qubits": [],
          "gates": [{"type": "CZ", "qubit": 0}]})";
  try {
    deserialize(text);
    FAIL() << "expected UnknownGateType";
  } catch (const UnknownGateType& e) {
    EXPECT_EQ(e.gate(), "CZ");
    EXPECT_NE(std::string(e.what()).find("CZ"), std::string::npos);
  }
}

TEST(Serialization, DistinctErrors) {
  EXPECT_THROW(deserialize("{not json"), MalformedCircuit);
  EXPECT_THROW(deserialize(R"({"version": 1, "gates": []})"), MalformedCircuit);
  EXPECT_THROW(
      deserialize(R"({"version": 1, "num_qubits": 2, "target_qubit": 0, "ancilla_qubits": [],
                      "gates": [{"type": "H", "qubit": 5}]})"),
      QubitIndexOutOfRange);
  EXPECT_THROW(
      deserialize(R"({"version": 1, "num_qubits": 2, "target_qubit": 3, "ancilla_qubits": [],
                      "gates": []})"),
      QubitIndexOutOfRange);
}

TEST(Serialization, SeventeenDigits) {
  Circuit c(1);
  c.add(rz_gate(0, 0.1 + 0.2));
  const Circuit back = deserialize(serialize(c));
  EXPECT_EQ(std::get<RotationGate>(back.gates()[0]).angle, 0.1 + 0.2);
}

TEST(TextExport, OneGatePerLine) {
  Circuit c(2);
  c.add(h_gate(1)).add(ms(0.5)).add(rz_gate(0, -0.25));
  const std::string text = to_text(c);
  EXPECT_NE(text.find("h 1\n"), std::string::npos);
  EXPECT_NE(text.find("ms 0.5\n"), std::string::npos);
  EXPECT_NE(text.find("rz 0 -0.25\n"), std::string::npos);
}

TEST(CircuitIr, RejectsBadQubits) {
  Circuit c(2);
  EXPECT_THROW(c.add(h_gate(2)), QubitIndexOutOfRange);
  EXPECT_THROW(Circuit(2, 2), QubitIndexOutOfRange);
  EXPECT_TRUE(touches(ms(0.1), 1));
  EXPECT_FALSE(touches(h_gate(0), 1));
}

}  // namespace
}  // namespace msqsp
