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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "msqsp/errors.hpp"
#include "msqsp/qsp.hpp"
#include "msqsp/target_fit.hpp"

namespace msqsp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBlockTol = 1e-8;

// Upper bound on how far padding searches for a phase-reset pulse count.
constexpr int kMaxPaddedPulses = 1 << 16;

}  // namespace

Eigen::Index Quadruple::degree() const {
  return std::max({A.degree(), B.degree(), C.degree(), D.degree()});
}

SU2Matrix Quadruple::operator()(double theta) const {
  return compose({A(theta), B(theta), C(theta), D(theta)});
}

double normalization_residual(const Quadruple& q, int grid_points) {
  double worst = 0.0;
  for (int j = 0; j < grid_points; ++j) {
    const double t = -kPi + 2 * kPi * j / grid_points;
    const double a = q.A(t), b = q.B(t), c = q.C(t), d = q.D(t);
    worst = std::max(worst, std::abs(a * a + b * b + c * c + d * d - 1.0));
  }
  return worst;
}

SU2Matrix evaluate_plan(std::span<const double> phis, double theta) {
  if (phis.empty()) return pauli::identity();
  SU2Matrix f = rz(phis[0]);
  const SU2Matrix step = rx(theta);
  for (std::size_t j = 1; j < phis.size(); ++j) {
    f = f * rz(-phis[j]) * step * rz(phis[j]);
  }
  return f;
}

CompilationPlan pad_for_phase_reset(CompilationPlan plan) {
  if (plan.phis.empty()) throw InvalidSize("plan has no angles");
  if (plan.num_pulses() % 2 != 0) {
    throw InvalidSize("plan length L = " + std::to_string(plan.num_pulses()) +
                      " is odd");
  }
  int target = plan.num_pulses();
  while (!phase_reset_ok(plan.num_qubits, target, plan.tau)) {
    target += 2;
    if (target > kMaxPaddedPulses) {
      throw PhaseResetViolation("no pulse count resets the Ising phases for tau = " +
                                std::to_string(plan.tau));
    }
  }
  // Each (0, pi) pair is R_x(theta) R_x(-theta) = 1.
  while (plan.num_pulses() < target) {
    plan.phis.push_back(0.0);
    plan.phis.push_back(kPi);
  }
  return plan;
}

Quadruple crot_quadruple(int num_qubits, double alpha) {
  const double reduced = reduce_rotation_angle(alpha);
  Series a = fit_A(num_qubits, reduced);
  Series b = Series::zero(Parity::Odd, a.degree());
  // The all-ones block is A(pi) + i D(pi) Z, which equals R_z(alpha) only
  // when D(pi) = -sin(alpha / 2).
  const int d_sign = std::sin(reduced / 2) > 0 ? -1 : 1;
  Completion cd = complete(a, b, d_sign);
  return {std::move(a), std::move(b), std::move(cd.C), std::move(cd.D)};
}

CompilationPlan crot_angles(int num_qubits, double alpha) {
  const PulseParams params = default_params(num_qubits);
  const double reduced = reduce_rotation_angle(alpha);
  CompilationPlan plan{num_qubits, params.tau, params.h, {}};

  if (std::abs(reduced) < 1e-12) {
    // With L = 2N every L * theta_q is a multiple of 2pi, so the all-zero
    // sequence is R_x(L theta_q) = +-1 uniformly across weights.
    plan.phis.assign(2 * num_qubits + 1, 0.0);
    return plan;
  }

  const Quadruple quad = crot_quadruple(num_qubits, reduced);
  plan.phis = extract_angles(quad);
  plan = pad_for_phase_reset(std::move(plan));

  const Eigen::VectorXd thetas = compute_thetas(num_qubits, plan.tau, plan.h);
  for (int q = 0; q < num_qubits; ++q) {
    const SU2Matrix want = q == num_qubits - 1 ? rz(reduced) : pauli::identity();
    const double err = operator_norm(evaluate_plan(plan.phis, thetas(q)) - want);
    if (err > kBlockTol) {
      throw ExtractionFailed("weight-" + std::to_string(q) +
                                 " block misses its target by " +
                                 std::to_string(err),
                             err);
    }
  }
  return plan;
}

CompilationPlan invert_plan(const CompilationPlan& plan) {
  if (plan.phis.empty()) return plan;
  // (R_z(p0) prod_j R_z(-p_j) R_x R_z(p_j))^dagger
  //   = prod_{j=L..1} R_z(-p_j) R_x(-theta) R_z(p_j) R_z(-p0),
  // and R_x(-theta) = R_z(pi) R_x(theta) R_z(-pi); moving R_z(-p0) to the
  // front shifts every step angle by -p0.
  CompilationPlan inv = plan;
  const double phi0 = plan.phis[0];
  const int steps = plan.num_pulses();
  double head = -phi0;
  if (head <= -2 * kPi) head += 4 * kPi;
  inv.phis[0] = head;
  for (int j = 1; j <= steps; ++j) {
    inv.phis[j] = canonical_angle(plan.phis[steps + 1 - j] + kPi - phi0);
  }
  return inv;
}

Quadruple weighted_quadruple(int num_qubits, std::span<const double> alphas) {
  WeightedFit fit = fit_weight_dependent(num_qubits, alphas);
  // C and D vanish at every theta_q, so the branch is irrelevant.
  Completion cd = complete(fit.A, fit.B, 1);
  return {std::move(fit.A), std::move(fit.B), std::move(cd.C), std::move(cd.D)};
}

CompilationPlan weighted_plan(int num_qubits, std::span<const double> alphas) {
  const PulseParams params = weighted_params(num_qubits);
  const Quadruple quad = weighted_quadruple(num_qubits, alphas);
  CompilationPlan plan{num_qubits, params.tau, params.h, extract_angles(quad)};
  plan = pad_for_phase_reset(std::move(plan));

  const Eigen::VectorXd thetas = compute_thetas(num_qubits, plan.tau, plan.h);
  for (int q = 0; q < num_qubits; ++q) {
    const double err = operator_norm(evaluate_plan(plan.phis, thetas(q)) -
                                     rx(reduce_rotation_angle(alphas[q])));
    if (err > kBlockTol) {
      throw ExtractionFailed("weight-" + std::to_string(q) +
                                 " block misses its target by " +
                                 std::to_string(err),
                             err);
    }
  }
  return plan;
}

}  // namespace msqsp
