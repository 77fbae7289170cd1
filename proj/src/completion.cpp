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

namespace msqsp {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Roots closer than this to |z| = 1 are treated as (halves of) double roots
// on the circle.
constexpr double kOnCircleTol = 1e-6;
constexpr double kNormalizationTol = 1e-10;

// Diagonal similarity scaling by powers of two, which leaves eigenvalues
// exact while shrinking the spread of entry magnitudes.
void balance(Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  constexpr double gamma = 0.9;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double row = m.row(i).lpNorm<1>() - std::abs(m(i, i));
      const double col = m.col(i).lpNorm<1>() - std::abs(m(i, i));
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      if (std::ldexp(col, exponent) + std::ldexp(row, -exponent) <
          gamma * (row + col)) {
        changed = true;
        m.row(i) *= std::ldexp(1.0, -exponent);
        m.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
}

cd horner(const Eigen::VectorXd& c, cd z) {
  cd acc(0);
  for (Eigen::Index i = c.size() - 1; i >= 0; --i) acc = acc * z + c(i);
  return acc;
}

cd horner_derivative(const Eigen::VectorXd& c, cd z) {
  cd acc(0);
  for (Eigen::Index i = c.size() - 1; i >= 1; --i) acc = acc * z + double(i) * c(i);
  return acc;
}

// Newton polish for a simple root; keeps the input if it does not improve.
cd polish(const Eigen::VectorXd& c, cd z) {
  for (int it = 0; it < 3; ++it) {
    const cd f = horner(c, z);
    const cd df = horner_derivative(c, z);
    if (std::abs(df) == 0.0) break;
    const cd next = z - f / df;
    if (std::abs(horner(c, next)) >= std::abs(f)) break;
    z = next;
  }
  return z;
}

// Values of a real Laurent polynomial g (indices lo..lo+size-1) on the circle.
cd eval_shifted(const Eigen::VectorXd& g, int lo, double theta) {
  cd acc(0);
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    acc += g(i) * std::polar(1.0, (lo + int(i)) * theta);
  }
  return acc;
}

// Gauss-Newton on |g|^2 = P over a grid; returns the refined coefficients.
Eigen::VectorXd refine_factor(Eigen::VectorXd g, int lo, const Series& a,
                              const Series& b, int grid) {
  auto target = [&](double t) {
    const double va = a(t);
    const double vb = b(t);
    return 1.0 - va * va - vb * vb;
  };
  auto residual = [&](const Eigen::VectorXd& x) {
    Eigen::VectorXd r(grid);
    for (int j = 0; j < grid; ++j) {
      const double t = -kPi + 2 * kPi * j / grid;
      r(j) = std::norm(eval_shifted(x, lo, t)) - target(t);
    }
    return r;
  };
  Eigen::VectorXd r = residual(g);
  for (int it = 0; it < 8; ++it) {
    Eigen::MatrixXd jac(grid, g.size());
    for (int j = 0; j < grid; ++j) {
      const double t = -kPi + 2 * kPi * j / grid;
      const cd gv = eval_shifted(g, lo, t);
      for (Eigen::Index k = 0; k < g.size(); ++k) {
        jac(j, k) = 2.0 * std::real(std::conj(gv) * std::polar(1.0, (lo + int(k)) * t));
      }
    }
    const Eigen::VectorXd step = jac.completeOrthogonalDecomposition().solve(-r);
    Eigen::VectorXd trial = g + step;
    Eigen::VectorXd rt = residual(trial);
    if (rt.cwiseAbs().maxCoeff() >= r.cwiseAbs().maxCoeff()) break;
    g = std::move(trial);
    r = std::move(rt);
  }
  return g;
}

}  // namespace

std::vector<cd> polynomial_roots(const Eigen::VectorXd& coeffs) {
  Eigen::Index n = coeffs.size() - 1;
  while (n > 0 && coeffs(n) == 0.0) --n;
  std::vector<cd> roots;
  if (n <= 0) return roots;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  companion.diagonal(-1).setOnes();
  companion.col(n - 1) = -coeffs.head(n) / coeffs(n);
  balance(companion);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw CompletionFailed("companion eigenvalue iteration did not converge",
                           std::numeric_limits<double>::infinity());
  }
  roots.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

Completion complete(const Series& a, const Series& b, int d_sign_at_pi) {
  if (a.parity() != Parity::Even || b.parity() != Parity::Odd) {
    throw InconsistentInput("completion expects A even and B odd");
  }
  const int m = static_cast<int>(std::max(a.degree(), b.degree()));

  // 1 - A^2 - B^2 as a real Laurent polynomial of degree 2m.
  const Laurent la = to_laurent(a.padded(m));
  const Laurent lb = to_laurent(b.padded(m));
  Laurent one(0);
  one[0] = 1.0;
  const Laurent p = one - la * la - lb * lb;

  Eigen::VectorXd pc(4 * m + 1);
  for (int k = -2 * m; k <= 2 * m; ++k) pc(k + 2 * m) = p[k].real();
  const double scale = pc.cwiseAbs().maxCoeff();

  Completion out{Series::zero(Parity::Odd, m), Series::zero(Parity::Even, m)};
  if (scale <= 1e-13) return out;

  int pdeg = 2 * m;
  while (pdeg > 0 && std::abs(pc(pdeg + 2 * m)) <= 1e-14 * scale) --pdeg;

  Eigen::VectorXd g;  // real coefficients of g, indices lo..lo+pdeg
  int lo = 0;
  if (pdeg == 0) {
    if (pc(2 * m) < 0) {
      throw CompletionFailed("1 - A^2 - B^2 is negative", -pc(2 * m));
    }
    g = Eigen::VectorXd::Constant(1, std::sqrt(pc(2 * m)));
  } else {
    // z^pdeg P(z) as an ordinary polynomial of degree 2 pdeg.
    const Eigen::VectorXd poly = pc.segment(2 * m - pdeg, 2 * pdeg + 1);
    std::vector<cd> roots = polynomial_roots(poly);

    std::vector<cd> chosen;
    std::vector<cd> circle;
    int outside = 0;
    for (cd r : roots) {
      const double gap = std::abs(r) - 1.0;
      if (std::abs(gap) < kOnCircleTol) {
        circle.push_back(r);
      } else if (gap < 0) {
        chosen.push_back(polish(poly, r));
      } else {
        ++outside;
      }
    }
    if (outside != static_cast<int>(chosen.size()) || circle.size() % 2 != 0) {
      throw CompletionFailed("root set of 1 - A^2 - B^2 is not reflection "
                             "symmetric; A^2 + B^2 likely exceeds 1",
                             std::numeric_limits<double>::infinity());
    }
    // On-circle roots are double; pair nearest neighbours and keep one copy.
    std::vector<bool> used(circle.size(), false);
    for (std::size_t i = 0; i < circle.size(); ++i) {
      if (used[i]) continue;
      std::size_t best = i;
      double dist = std::numeric_limits<double>::infinity();
      for (std::size_t j = i + 1; j < circle.size(); ++j) {
        if (!used[j] && std::abs(circle[j] - circle[i]) < dist) {
          dist = std::abs(circle[j] - circle[i]);
          best = j;
        }
      }
      used[i] = used[best] = true;
      const cd mid = (circle[i] + circle[best]) / 2.0;
      chosen.push_back(mid / std::abs(mid));
    }

    // Monic product over the chosen roots.
    Eigen::VectorXcd prod = Eigen::VectorXcd::Zero(chosen.size() + 1);
    prod(0) = 1.0;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      for (std::size_t j = i + 1; j > 0; --j) {
        prod(j) = prod(j - 1) - chosen[i] * prod(j);
      }
      prod(0) = -chosen[i] * prod(0);
    }
    g = prod.real();
    lo = -pdeg / 2;

    // Scale so that |g|^2 matches P in least squares on a grid.
    const int grid = std::max(64, 8 * pdeg);
    double num = 0.0;
    double den = 0.0;
    for (int j = 0; j < grid; ++j) {
      const double t = -kPi + 2 * kPi * j / grid;
      const double target = 1.0 - a(t) * a(t) - b(t) * b(t);
      const double mag = std::norm(eval_shifted(g, lo, t));
      num += target * mag;
      den += mag * mag;
    }
    g *= std::sqrt(num / den);
  }

  auto assemble = [&](const Eigen::VectorXd& coeffs) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(m + 1);
    Eigen::VectorXd d = Eigen::VectorXd::Zero(m + 1);
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
      const int k = lo + int(i);
      if (k == 0) {
        d(0) += coeffs(i);
      } else if (k > 0) {
        d(k) += coeffs(i);
        c(k) += coeffs(i);
      } else {
        d(-k) += coeffs(i);
        c(-k) -= coeffs(i);
      }
    }
    return Completion{Series(Parity::Odd, std::move(c)),
                      Series(Parity::Even, std::move(d))};
  };

  constexpr int kCheckGrid = 1024;
  out = assemble(g);
  double residual = normalization_residual({a, b, out.C, out.D}, kCheckGrid);
  if (residual > kNormalizationTol) {
    g = refine_factor(std::move(g), lo, a, b, std::max(64, 4 * int(g.size())));
    out = assemble(g);
    residual = normalization_residual({a, b, out.C, out.D}, kCheckGrid);
    if (residual > kNormalizationTol) {
      throw CompletionFailed("completed quadruple is not normalized (residual " +
                                 std::to_string(residual) + ")",
                             residual);
    }
  }

  const double d_pi = out.D(kPi);
  if (std::abs(d_pi) > 1e-9 && (d_pi > 0) != (d_sign_at_pi > 0)) {
    out.C = -out.C;
    out.D = -out.D;
  }
  return out;
}

}  // namespace msqsp
