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

#ifndef MSQSP_QSP_HPP
#define MSQSP_QSP_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "msqsp/ising_subspace.hpp"
#include "msqsp/su2.hpp"
#include "msqsp/trig_series.hpp"

namespace msqsp {

/// Pauli components F(theta) = A + iB X + iC Y + iD Z of a composite gate,
/// with A, D even and B, C odd.
struct Quadruple {
  Series A;
  Series B;
  Series C;
  Series D;

  Eigen::Index degree() const;
  SU2Matrix operator()(double theta) const;
};

/// max |A^2 + B^2 + C^2 + D^2 - 1| over a uniform grid on [-pi, pi).
double normalization_residual(const Quadruple& q, int grid_points);

/// The compiled program: angles phi_0..phi_L plus the pulse parameters.
struct CompilationPlan {
  int num_qubits = 0;
  double tau = 0.0;
  double h = 0.0;
  std::vector<double> phis;

  int num_pulses() const { return static_cast<int>(phis.size()) - 1; }
  PulseParams params() const { return {tau, h}; }
};

/// Roots of sum_i coeffs[i] z^i via eigenvalues of the balanced companion
/// matrix. Leading zeros are stripped.
std::vector<std::complex<double>> polynomial_roots(const Eigen::VectorXd& coeffs);

struct Completion {
  Series C;  // odd
  Series D;  // even
};

/*
 * Finds C (odd) and D (even) of the same degree as (A, B) with
 * A^2 + B^2 + C^2 + D^2 = 1, by spectrally factorizing 1 - A^2 - B^2 = |g|^2
 * on the unit circle with a real-coefficient Laurent polynomial g and setting
 * D + iC = g(e^{i theta}).
 *
 * If |D(pi)| > 1e-9 its sign is made to match d_sign_at_pi by flipping
 * (C, D) together.
 */
Completion complete(const Series& a, const Series& b, int d_sign_at_pi);

/// Recovers phi_0..phi_L (L = 2M, M the effective degree) such that
/// evaluate_plan reproduces the quadruple.
std::vector<double> extract_angles(const Quadruple& target);

/// R_z(phi_0) prod_{j=1}^{L} R_z(-phi_j) R_x(theta) R_z(phi_j).
SU2Matrix evaluate_plan(std::span<const double> phis, double theta);

/// Appends identity pairs (0, pi) until tau * L is a multiple of 2pi.
CompilationPlan pad_for_phase_reset(CompilationPlan plan);

/// The quadruple compiled for C^{N-1} R_z(alpha) (before angle extraction).
Quadruple crot_quadruple(int num_qubits, double alpha);

/// Angles for C^{N-1} R_z(alpha) on the default pulse parameters, L = 2N.
CompilationPlan crot_angles(int num_qubits, double alpha);

/// Plan whose circuit is the inverse of the given one.
CompilationPlan invert_plan(const CompilationPlan& plan);

Quadruple weighted_quadruple(int num_qubits, std::span<const double> alphas);

/// Angles for R_x(alphas[q]) conditioned on control Hamming weight q, L = 4N.
CompilationPlan weighted_plan(int num_qubits, std::span<const double> alphas);

}  // namespace msqsp

#endif  // MSQSP_QSP_HPP
