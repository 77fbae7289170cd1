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
#include <cstdio>
#include <cmath>
#include <numbers>
#include <string>

#include "msqsp/errors.hpp"
#include "msqsp/qsp.hpp"

namespace msqsp {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kReconstructionTol = 1e-9;

// F(w) = sum_k F_k w^k with w = e^{i theta / 2}; coefficients from -deg..deg.
using MatrixLaurent = std::vector<Eigen::Matrix2cd>;

MatrixLaurent to_half_angle(const Quadruple& q, int m) {
  const int span = 2 * m;  // degree in w
  MatrixLaurent f(2 * span + 1, Eigen::Matrix2cd::Zero());
  const Eigen::Matrix2cd one = pauli::identity();
  const Eigen::Matrix2cd ix = cd(0, 1) * pauli::x();
  const Eigen::Matrix2cd iy = cd(0, 1) * pauli::y();
  const Eigen::Matrix2cd iz = cd(0, 1) * pauli::z();
  const Laurent la = to_laurent(q.A.padded(m));
  const Laurent lb = to_laurent(q.B.padded(m));
  const Laurent lc = to_laurent(q.C.padded(m));
  const Laurent ld = to_laurent(q.D.padded(m));
  for (int k = -m; k <= m; ++k) {
    // z^k = w^{2k}
    f[span + 2 * k] = la[k] * one + lb[k] * ix + lc[k] * iy + ld[k] * iz;
  }
  return f;
}

double reconstruction_error(std::span<const double> phis, const Quadruple& q,
                            int grid) {
  double worst = 0.0;
  for (int j = 0; j < grid; ++j) {
    const double t = -kPi + 2 * kPi * j / grid;
    worst = std::max(worst, operator_norm(evaluate_plan(phis, t) - q(t)));
  }
  return worst;
}

// Stacked real and imaginary parts of evaluate_plan - target on the grid,
// with the exact Jacobian from prefix and suffix products.
void residual_and_jacobian(const std::vector<double>& phis, const Quadruple& q,
                           int grid, Eigen::VectorXd& r, Eigen::MatrixXd* jac) {
  const int n = static_cast<int>(phis.size());
  const cd half_i(0, 0.5);
  const Eigen::Matrix2cd z = pauli::z();
  r.resize(8 * grid);
  if (jac) jac->resize(8 * grid, n);
  std::vector<Eigen::Matrix2cd> steps(n), prefix(n), suffix(n + 1);
  for (int g = 0; g < grid; ++g) {
    const double t = -kPi + 2 * kPi * g / grid;
    const Eigen::Matrix2cd x = rx(t);
    steps[0] = rz(phis[0]);
    for (int j = 1; j < n; ++j) steps[j] = rz(-phis[j]) * x * rz(phis[j]);
    prefix[0] = steps[0];
    for (int j = 1; j < n; ++j) prefix[j] = prefix[j - 1] * steps[j];
    suffix[n] = Eigen::Matrix2cd::Identity();
    for (int j = n - 1; j >= 0; --j) suffix[j] = steps[j] * suffix[j + 1];

    const Eigen::Matrix2cd d = prefix[n - 1] - q(t);
    for (int e = 0; e < 4; ++e) {
      r(8 * g + 2 * e) = d(e / 2, e % 2).real();
      r(8 * g + 2 * e + 1) = d(e / 2, e % 2).imag();
    }
    if (!jac) continue;
    for (int j = 0; j < n; ++j) {
      Eigen::Matrix2cd dj;
      if (j == 0) {
        dj = -half_i * z * prefix[n - 1];
      } else {
        const Eigen::Matrix2cd dstep = half_i * (z * steps[j] - steps[j] * z);
        dj = prefix[j - 1] * dstep * suffix[j + 1];
      }
      for (int e = 0; e < 4; ++e) {
        (*jac)(8 * g + 2 * e, j) = dj(e / 2, e % 2).real();
        (*jac)(8 * g + 2 * e + 1, j) = dj(e / 2, e % 2).imag();
      }
    }
  }
}

// Levenberg-Marquardt on the grid residual. The damped system is solved as a
// stacked least-squares problem so the conditioning is not squared.
std::vector<double> refine(std::vector<double> phis, const Quadruple& q,
                           int grid) {
  const int n = static_cast<int>(phis.size());
  Eigen::VectorXd r, trial_r;
  Eigen::MatrixXd jac;
  residual_and_jacobian(phis, q, grid, r, &jac);
  for (int it = 0; it < 200 && r.cwiseAbs().maxCoeff() > 1e-15; ++it) {
    // Plain Gauss-Newton first; damp only when it fails to reduce the residual.
    double lambda = 0.0;
    bool improved = false;
    for (int attempt = 0; attempt < 16 && !improved; ++attempt) {
      Eigen::MatrixXd a(jac.rows() + n, n);
      a << jac, std::sqrt(lambda) * Eigen::MatrixXd::Identity(n, n);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(jac.rows() + n);
      rhs.head(r.size()) = -r;
      const Eigen::VectorXd delta = a.completeOrthogonalDecomposition().solve(rhs);
      std::vector<double> trial = phis;
      for (int k = 0; k < n; ++k) trial[k] += delta(k);
      residual_and_jacobian(trial, q, grid, trial_r, nullptr);
      if (trial_r.squaredNorm() < r.squaredNorm()) {
        phis = std::move(trial);
        improved = true;
      } else {
        lambda = lambda == 0.0 ? 1e-12 : lambda * 10;
      }
    }
    if (!improved) break;
    residual_and_jacobian(phis, q, grid, r, &jac);
  }
  return phis;
}

// Layer stripping from the last step inward.
std::vector<double> peel(const Quadruple& target, int m) {
  const int steps = 2 * m;

  MatrixLaurent f = to_half_angle(target, m);
  std::vector<double> peeled;  // phi_L, phi_{L-1}, ..., phi_1
  peeled.reserve(steps);
  const Eigen::Matrix2cd plus = (pauli::identity() + pauli::x()) / 2.0;

  for (int deg = steps; deg > 0; --deg) {
    const Eigen::Matrix2cd& top = f.back();
    const Eigen::Matrix2cd& bottom = f.front();
    // Removing the last step S(w) = Q w^{-1} + (1 - Q) w requires
    // top * Q = 0 and bottom * (1 - Q) = 0, where Q projects onto
    // (1, e^{-i phi}) / sqrt(2). Solve both in least squares for |e| = 1.
    cd s(0);
    for (int r = 0; r < 2; ++r) {
      s += std::conj(top(r, 0)) * top(r, 1);
      s -= std::conj(bottom(r, 0)) * bottom(r, 1);
    }
    const double weight = std::max(top.cwiseAbs().maxCoeff(),
                                   bottom.cwiseAbs().maxCoeff());
    // Degenerate edge coefficients: any phi works, pick zero.
    const double phi = weight < 1e-12 || std::abs(s) == 0.0 ? 0.0 : std::arg(-s);

    const Eigen::Matrix2cd q = rz(-phi) * plus * rz(phi);
    const Eigen::Matrix2cd not_q = pauli::identity() - q;
    // f * S^{-1} = f * (Q w + (1 - Q) w^{-1})
    MatrixLaurent next(2 * (deg - 1) + 1, Eigen::Matrix2cd::Zero());
    for (int i = 0; i < static_cast<int>(f.size()); ++i) {
      const int k = i - deg;
      if (std::abs(k + 1) <= deg - 1) next[k + 1 + deg - 1] += f[i] * q;
      if (std::abs(k - 1) <= deg - 1) next[k - 1 + deg - 1] += f[i] * not_q;
    }
    f = std::move(next);
    peeled.push_back(canonical_angle(phi));
  }

  std::vector<double> phis;
  phis.reserve(steps + 1);
  // What remains is R_z(phi_0) = diag(e^{-i phi_0/2}, e^{i phi_0/2}).
  const cd half = f[0](1, 1) + std::conj(f[0](0, 0));
  double phi0 = 2 * std::arg(half);
  if (phi0 <= -2 * kPi) phi0 += 4 * kPi;
  phis.push_back(phi0);
  phis.insert(phis.end(), peeled.rbegin(), peeled.rend());

  return phis;
}

Quadruple adjoint(const Quadruple& q) { return {q.A, -q.B, -q.C, -q.D}; }

}  // namespace

std::vector<double> extract_angles(const Quadruple& target) {
  constexpr double kTrim = 1e-12;
  const int m = static_cast<int>(std::max(
      {target.A.trimmed(kTrim).degree(), target.B.trimmed(kTrim).degree(),
       target.C.trimmed(kTrim).degree(), target.D.trimmed(kTrim).degree()}));
  const int grid = std::max(64, 4 * m);

  std::vector<double> phis = peel(target, m);
  double err = reconstruction_error(phis, target, grid);
  if (err <= kReconstructionTol) return phis;

  // Stripping amplifies rounding when the edge coefficients stay small for
  // many steps. Stripping the adjoint works from the other end of the
  // sequence; the better start is refined.
  CompilationPlan reversed{0, 0.0, 0.0, peel(adjoint(target), m)};
  std::vector<double> other = invert_plan(reversed).phis;
  for (double& p : other) p = canonical_angle(p);
  const double other_err = reconstruction_error(other, target, grid);
  if (other_err < err) {
    phis = std::move(other);
    err = other_err;
  }
  if (err > kReconstructionTol) {
    phis = refine(std::move(phis), target, grid);
    err = reconstruction_error(phis, target, grid);
  }
  if (err > kReconstructionTol) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "angle sequence reproduces the target only to %.3g", err);
    throw ExtractionFailed(buf, err);
  }
  return phis;
}

}  // namespace msqsp
