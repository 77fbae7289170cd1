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

#include "msqsp/su2.hpp"

#include <algorithm>
#include <cmath>

namespace msqsp {

namespace {
using cd = std::complex<double>;
constexpr cd kI(0.0, 1.0);
}  // namespace

namespace pauli {
SU2Matrix identity() { return SU2Matrix::Identity(); }

SU2Matrix x() {
  SU2Matrix m;
  m << 0, 1, 1, 0;
  return m;
}

SU2Matrix y() {
  SU2Matrix m;
  m << 0, -kI, kI, 0;
  return m;
}

SU2Matrix z() {
  SU2Matrix m;
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

SU2Matrix rx(double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  SU2Matrix m;
  m << c, -kI * s, -kI * s, c;
  return m;
}

SU2Matrix ry(double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  SU2Matrix m;
  m << c, -s, s, c;
  return m;
}

SU2Matrix rz(double angle) {
  SU2Matrix m;
  m << std::polar(1.0, -angle / 2), 0, 0, std::polar(1.0, angle / 2);
  return m;
}

Eigen::Matrix2cd hadamard() {
  Eigen::Matrix2cd m;
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

PauliComponents decompose(const Eigen::Matrix2cd& u) {
  // tr(P U) / 2 = i * component for P in {X, Y, Z}.
  const cd a = (u(0, 0) + u(1, 1)) / 2.0;
  const cd b = (u(0, 1) + u(1, 0)) / (2.0 * kI);
  const cd c = (u(0, 1) - u(1, 0)) / 2.0;
  const cd d = (u(0, 0) - u(1, 1)) / (2.0 * kI);
  return {a.real(), b.real(), c.real(), d.real()};
}

SU2Matrix compose(const PauliComponents& p) {
  SU2Matrix m;
  m << cd(p.a, p.d), cd(p.c, p.b), cd(-p.c, p.b), cd(p.a, -p.d);
  return m;
}

double operator_norm(const Eigen::Matrix2cd& m) {
  // sigma_max^2 is the larger eigenvalue of the Hermitian M^H M.
  const Eigen::Matrix2cd g = m.adjoint() * m;
  const double tr = g.trace().real();
  const double det = std::abs(g.determinant());
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
  return std::sqrt(tr / 2 + disc);
}

bool is_su2(const Eigen::Matrix2cd& m, double tol) {
  const double unitary =
      (m.adjoint() * m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  return unitary <= tol && std::abs(m.determinant() - 1.0) <= tol;
}

}  // namespace msqsp
