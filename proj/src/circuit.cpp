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

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "msqsp/errors.hpp"
#include "msqsp/ising_subspace.hpp"
#include "msqsp/target_fit.hpp"

namespace msqsp {

namespace {

constexpr double kPi = std::numbers::pi;

void check_qubit(int qubit, int num_qubits) {
  if (qubit < 0 || qubit >= num_qubits) {
    throw QubitIndexOutOfRange("qubit " + std::to_string(qubit) +
                               " outside register of " +
                               std::to_string(num_qubits));
  }
}

void add_control_hadamards(Circuit& c, int rotation_target) {
  for (int q = 0; q < c.num_qubits(); ++q) {
    if (q != rotation_target) c.add(h_gate(q));
  }
}

}  // namespace

bool touches(const Gate& gate, int qubit) {
  return std::visit(
      [qubit](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, MsGate>) {
          return true;
        } else {
          return g.qubit == qubit;
        }
      },
      gate);
}

Circuit::Circuit(int num_qubits, int target_qubit, std::vector<int> ancilla_qubits)
    : num_qubits_(num_qubits),
      target_qubit_(target_qubit),
      ancillas_(std::move(ancilla_qubits)) {
  if (num_qubits_ < 1) throw InvalidSize("circuit needs at least one qubit");
  check_qubit(target_qubit_, num_qubits_);
  for (int a : ancillas_) check_qubit(a, num_qubits_);
}

Circuit& Circuit::add(Gate gate) {
  if (const auto* r = std::get_if<RotationGate>(&gate)) check_qubit(r->qubit, num_qubits_);
  if (const auto* hd = std::get_if<HadamardGate>(&gate)) check_qubit(hd->qubit, num_qubits_);
  gates_.push_back(gate);
  return *this;
}

std::size_t Circuit::ms_count() const {
  return std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) {
    return std::holds_alternative<MsGate>(g);
  });
}

Circuit build_crot_circuit(const CompilationPlan& plan, int rotation_target) {
  if (plan.phis.empty()) throw InvalidSize("plan has no angles");
  const int steps = plan.num_pulses();
  if (!phase_reset_ok(plan.num_qubits, steps, plan.tau)) {
    throw PhaseResetViolation(
        "tau * L = " + std::to_string(plan.tau * steps) +
        " is not a multiple of 2pi; control-dependent phases would remain");
  }
  Circuit c(plan.num_qubits, rotation_target);
  add_control_hadamards(c, rotation_target);
  for (int j = steps; j >= 1; --j) {
    c.add(rz_gate(rotation_target, plan.phis[j]));
    c.add(ms(plan.tau));
    c.add(rx_gate(rotation_target, plan.h));
    c.add(rz_gate(rotation_target, -plan.phis[j]));
  }
  add_control_hadamards(c, rotation_target);
  c.add(rz_gate(rotation_target, plan.phis[0]));
  return c;
}

Circuit merge_adjacent_rz(const Circuit& circuit) {
  Circuit out(circuit.num_qubits(), circuit.target_qubit(), circuit.ancilla_qubits());
  std::map<int, double> pending;

  auto flush = [&](int qubit) {
    auto it = pending.find(qubit);
    if (it == pending.end()) return;
    double angle = std::remainder(it->second, 4 * kPi);
    if (angle <= -2 * kPi) angle += 4 * kPi;
    if (std::abs(angle) >= 1e-12) out.add(rz_gate(qubit, angle));
    pending.erase(it);
  };

  for (const Gate& g : circuit.gates()) {
    if (const auto* r = std::get_if<RotationGate>(&g); r && r->axis == Axis::Z) {
      pending[r->qubit] += r->angle;
      continue;
    }
    if (std::holds_alternative<MsGate>(g)) {
      while (!pending.empty()) flush(pending.begin()->first);
    } else {
      const int q = std::holds_alternative<RotationGate>(g)
                        ? std::get<RotationGate>(g).qubit
                        : std::get<HadamardGate>(g).qubit;
      flush(q);
    }
    out.add(g);
  }
  while (!pending.empty()) flush(pending.begin()->first);
  return out;
}

std::vector<double> merged_angles(const CompilationPlan& plan) {
  const int steps = plan.num_pulses();
  std::vector<double> merged;
  merged.reserve(steps + 1);
  if (steps == 0) {
    merged.push_back(plan.phis[0]);
    return merged;
  }
  merged.push_back(plan.phis[steps]);
  for (int j = steps; j >= 2; --j) merged.push_back(plan.phis[j - 1] - plan.phis[j]);
  merged.push_back(plan.phis[0] - plan.phis[1]);
  return merged;
}

Circuit build_from_merged(int num_qubits, double tau, double h,
                          std::span<const double> merged) {
  if (num_qubits < 2) throw InvalidSize("need at least 2 qubits");
  const std::size_t expected = 2 * static_cast<std::size_t>(num_qubits) + 1;
  if (merged.size() != expected) {
    throw InvalidSize("expected " + std::to_string(expected) +
                      " merged angles, got " + std::to_string(merged.size()));
  }
  Circuit c(num_qubits, 0);
  add_control_hadamards(c, 0);
  c.add(rz_gate(0, merged[0]));
  for (std::size_t j = 1; j < merged.size(); ++j) {
    c.add(ms(tau));
    c.add(rx_gate(0, h));
    c.add(rz_gate(0, merged[j]));
  }
  add_control_hadamards(c, 0);
  return c;
}

Circuit build_toffoli_circuit(int n) {
  if (n < 2) throw InvalidSize("Toffoli needs at least 2 qubits, got " + std::to_string(n));
  const int ancilla = n;
  // R_z(2pi) = -1 on the ancilla when all n other qubits are |1>: a
  // multi-controlled Z on qubits 0..n-1, turned into a Toffoli by H on 0.
  const CompilationPlan plan = crot_angles(n + 1, 2 * kPi);
  const Circuit phase = build_crot_circuit(plan, ancilla);

  Circuit c(n + 1, 0, {ancilla});
  c.add(h_gate(0));
  for (const Gate& g : phase.gates()) c.add(g);
  c.add(h_gate(0));
  return c;
}

}  // namespace msqsp
