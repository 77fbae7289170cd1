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

#ifndef MSQSP_TARGET_FIT_HPP
#define MSQSP_TARGET_FIT_HPP

#include <span>
#include <variant>
#include <vector>

#include "msqsp/ising_subspace.hpp"
#include "msqsp/trig_series.hpp"

namespace msqsp {

/// C^{N-1} R_z(alpha): rotate the target only when every control is |1>.
struct ControlledRz {
  int num_qubits;
  double alpha;
};

/// R_x(alphas[q]) on the target whenever the controls have Hamming weight q.
struct WeightDependentX {
  int num_qubits;
  std::vector<double> alphas;
};

using GateTarget = std::variant<ControlledRz, WeightDependentX>;

/// One pinned point of an even series: A(theta) = value, and optionally
/// A'(theta) = 0.
struct PinnedPoint {
  double theta;
  double value;
  bool pin_derivative;
};

struct ConstraintSet {
  std::vector<PinnedPoint> points;
  int degree = 0;

  /// Number of scalar equations (values plus derivative pins).
  int count() const;
};

/// Rotation angle reduced to (-2pi, 2pi]; rotations have period 4pi.
double reduce_rotation_angle(double alpha);

/// Constraints on A for C^{N-1} R_z(alpha) at the default pulse parameters.
/// Points are folded to [0, pi] and deduplicated; derivatives are pinned only
/// at interior points (cosine series are flat at 0 and pi).
ConstraintSet constraint_set_crot(int num_qubits, double alpha);

struct ConstrainedFit {
  Series series;
  double residual;   // max |row . coeffs - rhs|
  double condition;  // reciprocal-condition estimate inverted, ~cond_1
};

/// Solves the square cosine-series system for a constraint set.
/// Throws FittingFailed if the system is singular or the residual is large.
ConstrainedFit solve_constraints(const ConstraintSet& constraints);

/// Even series of degree N-1 realizing the controlled-R_z pins; also
/// checks max |A| <= 1 + 1e-9 on a 2048-point grid.
Series fit_A(int num_qubits, double alpha);

/// Pulse parameters used for Hamming-weight-dependent gates:
/// tau = pi/(2N), h = pi/2, so that every theta_q lies strictly inside
/// (0, pi) and the even/odd symmetry of A and B never forces two weights to
/// share a value.
PulseParams weighted_params(int num_qubits);

struct WeightedFit {
  Series A;  // even
  Series B;  // odd
  PulseParams params;
};

/// Even A and odd B of degree 2N with A(theta_q) = cos(alpha_q/2),
/// B(theta_q) = -sin(alpha_q/2) and A' = B' = 0 at every theta_q. The one
/// remaining degree of freedom is fixed by the least weighted energy
/// sum_k k^2 (a_k^2 + b_k^2).
WeightedFit fit_weight_dependent(int num_qubits, std::span<const double> alphas);

/// Max of A^2 + B^2 over a uniform grid, with the argmax.
std::pair<double, double> max_norm_squared(const Series& a, const Series& b,
                                           int grid_points);

}  // namespace msqsp

#endif  // MSQSP_TARGET_FIT_HPP
