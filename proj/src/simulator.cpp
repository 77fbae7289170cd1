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

#include "msqsp/simulator.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "msqsp/errors.hpp"

namespace msqsp {

namespace {

using cd = std::complex<double>;

Eigen::Index dim(int num_qubits) { return Eigen::Index(1) << num_qubits; }

void hadamard_all(Eigen::Ref<Eigen::VectorXcd> amps, int num_qubits) {
  const double s = 1.0 / std::sqrt(2.0);
  const Eigen::Index n = amps.size();
  for (int q = 0; q < num_qubits; ++q) {
    const Eigen::Index stride = Eigen::Index(1) << q;
    for (Eigen::Index base = 0; base < n; base += 2 * stride) {
      for (Eigen::Index i = base; i < base + stride; ++i) {
        const cd a = amps(i);
        const cd b = amps(i + stride);
        amps(i) = s * (a + b);
        amps(i + stride) = s * (a - b);
      }
    }
  }
}

Eigen::Matrix2cd gate_matrix(const RotationGate& g) {
  switch (g.axis) {
    case Axis::X: return rx(g.angle);
    case Axis::Y: return ry(g.angle);
    case Axis::Z: return rz(g.angle);
  }
  return Eigen::Matrix2cd::Identity();
}

void apply_to(Eigen::Ref<Eigen::VectorXcd> amps, int num_qubits, const Gate& gate) {
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, MsGate>) {
          apply_ms(amps, num_qubits, g.tau);
        } else if constexpr (std::is_same_v<T, RotationGate>) {
          apply_single_qubit(amps, g.qubit, gate_matrix(g));
        } else {
          apply_single_qubit(amps, g.qubit, hadamard());
        }
      },
      gate);
}

void check_gate(const Gate& gate, int num_qubits) {
  for (int q = 0; q < num_qubits; ++q) {
    if (touches(gate, q)) return;
  }
  throw QubitIndexOutOfRange("gate acts outside a register of " +
                             std::to_string(num_qubits) + " qubits");
}

}  // namespace

StateVector::StateVector(int num_qubits)
    : num_qubits_(num_qubits), amps_(Eigen::VectorXcd::Zero(dim(num_qubits))) {
  amps_(0) = 1.0;
}

StateVector::StateVector(int num_qubits, Eigen::VectorXcd amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != dim(num_qubits_)) {
    throw InvalidSize("amplitude vector has the wrong length");
  }
}

StateVector StateVector::basis(int num_qubits, Eigen::Index index) {
  StateVector s(num_qubits);
  s.amps_(0) = 0.0;
  s.amps_(index) = 1.0;
  return s;
}

void StateVector::apply(const Gate& gate) {
  check_gate(gate, num_qubits_);
  apply_to(amps_, num_qubits_, gate);
}

void apply_gate(StateVector& state, const Gate& gate) { state.apply(gate); }

void apply_single_qubit(Eigen::Ref<Eigen::VectorXcd> amps, int qubit,
                        const Eigen::Matrix2cd& u) {
  const Eigen::Index stride = Eigen::Index(1) << qubit;
  const Eigen::Index n = amps.size();
  for (Eigen::Index base = 0; base < n; base += 2 * stride) {
    for (Eigen::Index i = base; i < base + stride; ++i) {
      const cd a = amps(i);
      const cd b = amps(i + stride);
      amps(i) = u(0, 0) * a + u(0, 1) * b;
      amps(i + stride) = u(1, 0) * a + u(1, 1) * b;
    }
  }
}

void apply_ms(Eigen::Ref<Eigen::VectorXcd> amps, int num_qubits, double tau) {
  // sum_{j,k} X_j X_k = (sum_j X_j)^2; in the X basis a state with m qubits
  // in |-> has eigenvalue (n - 2m)^2.
  hadamard_all(amps, num_qubits);
  std::vector<cd> phase(num_qubits + 1);
  for (int m = 0; m <= num_qubits; ++m) {
    const double s = num_qubits - 2 * m;
    phase[m] = std::polar(1.0, -tau * s * s / 4);
  }
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    amps(i) *= phase[std::popcount(static_cast<std::uint64_t>(i))];
  }
  hadamard_all(amps, num_qubits);
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
  const int n = circuit.num_qubits();
  if (n > kMaxUnitaryQubits) {
    throw SizeGuardExceeded("dense unitary of " + std::to_string(n) +
                            " qubits exceeds the limit of " +
                            std::to_string(kMaxUnitaryQubits));
  }
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim(n), dim(n));
  for (const Gate& g : circuit.gates()) check_gate(g, n);
  // Columns are independent; a fixed column order keeps results bitwise
  // reproducible.
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    for (const Gate& g : circuit.gates()) apply_to(u.col(col), n, g);
  }
  return u;
}

Eigen::MatrixXcd ideal_crot(int num_qubits, double alpha, int target) {
  const Eigen::Index d = dim(num_qubits);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  const Eigen::Index tbit = Eigen::Index(1) << target;
  const Eigen::Index controls = (d - 1) & ~tbit;
  const Eigen::Matrix2cd r = rz(alpha);
  u(controls, controls) = r(0, 0);
  u(controls | tbit, controls | tbit) = r(1, 1);
  return u;
}

Eigen::MatrixXcd ideal_weighted_x(int num_qubits, std::span<const double> alphas) {
  if (static_cast<int>(alphas.size()) != num_qubits) {
    throw InvalidSize("need one angle per Hamming weight");
  }
  const Eigen::Index d = dim(num_qubits);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index c = 0; c < d; c += 2) {
    const int weight = std::popcount(static_cast<std::uint64_t>(c));
    u.block<2, 2>(c, c) = rx(alphas[weight]);
  }
  return u;
}

Eigen::MatrixXcd ideal_toffoli(int n) {
  if (n < 2) throw InvalidSize("Toffoli needs at least 2 qubits");
  const Eigen::Index d = dim(n);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  const Eigen::Index a = d - 2;  // controls all ones, target 0
  const Eigen::Index b = d - 1;
  u(a, a) = u(b, b) = 0.0;
  u(a, b) = u(b, a) = 1.0;
  return u;
}

double phase_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw InvalidSize("phase_distance needs matrices of equal shape");
  }
  const cd overlap = (u.adjoint() * v).trace();
  return std::max(0.0, 1.0 - std::abs(overlap) / static_cast<double>(u.rows()));
}

AncillaProjection project_ancilla(const Eigen::MatrixXcd& u, int ancilla, int bit) {
  const Eigen::Index d = u.rows();
  const Eigen::Index half = d / 2;
  const Eigen::Index abit = Eigen::Index(1) << ancilla;
  auto expand = [&](Eigen::Index i) {
    const Eigen::Index low = i & (abit - 1);
    const Eigen::Index high = (i & ~(abit - 1)) << 1;
    return high | low | (bit ? abit : 0);
  };
  AncillaProjection p{Eigen::MatrixXcd(half, half), 0.0};
  for (Eigen::Index c = 0; c < half; ++c) {
    for (Eigen::Index r = 0; r < half; ++r) p.block(r, c) = u(expand(r), expand(c));
    p.leakage = std::max(p.leakage, 1.0 - p.block.col(c).norm());
  }
  return p;
}

Eigen::Matrix2cd target_block(const Eigen::MatrixXcd& u, int target,
                              Eigen::Index controls) {
  const Eigen::Index tbit = Eigen::Index(1) << target;
  const Eigen::Index i0 = controls & ~tbit;
  const Eigen::Index i1 = i0 | tbit;
  Eigen::Matrix2cd b;
  b << u(i0, i0), u(i0, i1), u(i1, i0), u(i1, i1);
  return b;
}

BlockReport analyze_blocks(const Eigen::MatrixXcd& u, int target) {
  const Eigen::Index d = u.rows();
  const Eigen::Index tbit = Eigen::Index(1) << target;
  const Eigen::Index all_ones = (d - 1) & ~tbit;
  BlockReport report{0.0, 0.0};
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) {
      if ((r & ~tbit) != (c & ~tbit)) {
        report.off_block = std::max(report.off_block, std::abs(u(r, c)));
      }
    }
  }
  for (Eigen::Index controls = 0; controls < d; ++controls) {
    if ((controls & tbit) || controls == all_ones) continue;
    const Eigen::Matrix2cd b = target_block(u, target, controls);
    report.non_phase = std::max({report.non_phase, std::abs(b(0, 1)),
                                 std::abs(b(1, 0)), std::abs(b(0, 0) - b(1, 1))});
  }
  return report;
}

}  // namespace msqsp
