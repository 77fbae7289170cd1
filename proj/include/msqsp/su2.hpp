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

#ifndef MSQSP_SU2_HPP
#define MSQSP_SU2_HPP

#include <complex>

#include <Eigen/Dense>

namespace msqsp {

using SU2Matrix = Eigen::Matrix2cd;

namespace pauli {
SU2Matrix identity();
SU2Matrix x();
SU2Matrix y();
SU2Matrix z();
}  // namespace pauli

// exp(-i P angle / 2) for P = X, Y, Z.
SU2Matrix rx(double angle);
SU2Matrix ry(double angle);
SU2Matrix rz(double angle);
Eigen::Matrix2cd hadamard();

/// Real Pauli components of U = a 1 + i b X + i c Y + i d Z. For U in SU(2)
/// these are exact; otherwise they are the projections onto that form.
struct PauliComponents {
  double a;
  double b;
  double c;
  double d;
};

PauliComponents decompose(const Eigen::Matrix2cd& u);
SU2Matrix compose(const PauliComponents& p);

/// Largest singular value.
double operator_norm(const Eigen::Matrix2cd& m);

bool is_su2(const Eigen::Matrix2cd& m, double tol = 1e-12);

}  // namespace msqsp

#endif  // MSQSP_SU2_HPP
