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

#include "msqsp/target_fit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "msqsp/errors.hpp"

namespace msqsp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kResidualTol = 1e-10;
constexpr double kNormSlack = 1e-9;
constexpr int kCheckGrid = 2048;

double max_abs_on_grid(const Series& s, int points, double* where) {
  double best = -1.0;
  for (int i = 0; i < points; ++i) {
    const double t = -kPi + 2 * kPi * i / points;
    const double v = std::abs(s(t));
    if (v > best) {
      best = v;
      *where = t;
    }
  }
  return best;
}

}  // namespace

int ConstraintSet::count() const {
  int n = 0;
  for (const auto& p : points) n += p.pin_derivative ? 2 : 1;
  return n;
}

double reduce_rotation_angle(double alpha) {
  double r = std::remainder(alpha, 4 * kPi);
  if (r <= -2 * kPi) r += 4 * kPi;
  return r;
}

ConstraintSet constraint_set_crot(int num_qubits, double alpha) {
  const PulseParams params = default_params(num_qubits);
  const Eigen::VectorXd thetas = compute_thetas(num_qubits, params.tau, params.h);
  const double pinned = std::cos(reduce_rotation_angle(alpha) / 2);

  ConstraintSet set;
  for (int q = 0; q < num_qubits; ++q) {
    const double folded = std::abs(canonical_angle(thetas(q)));
    const double value = q == num_qubits - 1 ? pinned : 1.0;
    auto dup = std::find_if(set.points.begin(), set.points.end(),
                            [&](const PinnedPoint& p) {
                              return std::abs(p.theta - folded) < 1e-9;
                            });
    if (dup != set.points.end()) {
      // Mirror images theta_q, -theta_q share the value by symmetry.
      continue;
    }
    const bool interior = folded > 1e-9 && folded < kPi - 1e-9;
    set.points.push_back({folded, value, interior});
  }
  std::sort(set.points.begin(), set.points.end(),
            [](const PinnedPoint& a, const PinnedPoint& b) {
              return a.theta < b.theta;
            });
  set.degree = set.count() - 1;
  return set;
}

ConstrainedFit solve_constraints(const ConstraintSet& constraints) {
  const int n = constraints.count();
  if (n != constraints.degree + 1) {
    throw FittingFailed("constraint count " + std::to_string(n) +
                        " does not match degree " +
                        std::to_string(constraints.degree));
  }
  Eigen::MatrixXd m(n, n);
  Eigen::VectorXd rhs(n);
  int row = 0;
  for (const auto& p : constraints.points) {
    for (int k = 0; k < n; ++k) m(row, k) = std::cos(k * p.theta);
    rhs(row++) = p.value;
    if (p.pin_derivative) {
      for (int k = 0; k < n; ++k) m(row, k) = -k * std::sin(k * p.theta);
      rhs(row++) = 0.0;
    }
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-14)) {
    throw FittingFailed("singular constraint matrix (rcond " +
                        std::to_string(rcond) + ")");
  }
  Eigen::VectorXd coeffs = lu.solve(rhs);
  const double residual = (m * coeffs - rhs).cwiseAbs().maxCoeff();
  if (residual > kResidualTol) {
    throw FittingFailed("constraint residual " + std::to_string(residual) +
                        " exceeds tolerance");
  }
  return {Series(Parity::Even, std::move(coeffs)), residual, 1.0 / rcond};
}

Series fit_A(int num_qubits, double alpha) {
  ConstrainedFit fit = solve_constraints(constraint_set_crot(num_qubits, alpha));
  double where = 0.0;
  const double peak = max_abs_on_grid(fit.series, kCheckGrid, &where);
  if (peak > 1.0 + kNormSlack) {
    throw FittingFailed("fitted |A| reaches " + std::to_string(peak), where);
  }
  return std::move(fit.series);
}

PulseParams weighted_params(int num_qubits) {
  if (num_qubits < 2) throw InvalidSize("need at least 2 qubits");
  return {kPi / (2 * num_qubits), kPi / 2};
}

std::pair<double, double> max_norm_squared(const Series& a, const Series& b,
                                           int grid_points) {
  double best = -1.0;
  double where = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double t = -kPi + 2 * kPi * i / grid_points;
    const double va = a(t);
    const double vb = b(t);
    const double v = va * va + vb * vb;
    if (v > best) {
      best = v;
      where = t;
    }
  }
  return {best, where};
}

WeightedFit fit_weight_dependent(int num_qubits,
                                 std::span<const double> alphas) {
  const PulseParams params = weighted_params(num_qubits);
  if (static_cast<int>(alphas.size()) != num_qubits) {
    throw InvalidSize("expected " + std::to_string(num_qubits) +
                      " weight angles, got " + std::to_string(alphas.size()));
  }
  const Eigen::VectorXd thetas = compute_thetas(num_qubits, params.tau, params.h);
  const int degree = 2 * num_qubits;
  const int cols_a = degree + 1;
  const int cols = cols_a + degree;  // a_0..a_M, b_1..b_M
  const int rows = 4 * num_qubits;

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (int q = 0; q < num_qubits; ++q) {
    const double t = thetas(q);
    const double half = reduce_rotation_angle(alphas[q]) / 2;
    const int r = 4 * q;
    for (int k = 0; k <= degree; ++k) {
      m(r, k) = std::cos(k * t);
      m(r + 1, k) = -k * std::sin(k * t);
    }
    for (int k = 1; k <= degree; ++k) {
      m(r + 2, cols_a + k - 1) = std::sin(k * t);
      m(r + 3, cols_a + k - 1) = k * std::cos(k * t);
    }
    rhs(r) = std::cos(half);
    rhs(r + 1) = 0.0;
    rhs(r + 2) = -std::sin(half);
    rhs(r + 3) = 0.0;
  }

  // One degree of freedom is left (more if the points are degenerate). Pick
  // the solution with the least weighted energy sum_k k^2 (a_k^2 + b_k^2),
  // so a constant target comes out as a constant series.
  Eigen::VectorXd x = m.completeOrthogonalDecomposition().solve(rhs);
  const Eigen::MatrixXd kernel = m.fullPivLu().kernel();
  Eigen::VectorXd w(cols);
  for (int k = 0; k <= degree; ++k) w(k) = k;
  for (int k = 1; k <= degree; ++k) w(cols_a + k - 1) = k;
  const Eigen::MatrixXd wk = w.asDiagonal() * kernel;
  if (wk.norm() > 0.0) {
    x -= kernel * wk.completeOrthogonalDecomposition().solve(w.asDiagonal() * x);
  }
  const double residual = (m * x - rhs).cwiseAbs().maxCoeff();
  if (residual > kResidualTol) {
    throw FittingFailed("weight-dependent constraint residual " +
                        std::to_string(residual));
  }

  Eigen::VectorXd b(degree + 1);
  b(0) = 0.0;
  b.tail(degree) = x.tail(degree);
  WeightedFit fit{Series(Parity::Even, x.head(cols_a)),
                  Series(Parity::Odd, std::move(b)), params};

  const auto [peak, where] = max_norm_squared(fit.A, fit.B, kCheckGrid);
  if (peak > 1.0 + kNormSlack) {
    throw FittingFailed("A^2 + B^2 reaches " + std::to_string(peak) +
                            " at theta = " + std::to_string(where),
                        where);
  }
  return fit;
}

}  // namespace msqsp
