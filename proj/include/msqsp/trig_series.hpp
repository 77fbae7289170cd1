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

#ifndef MSQSP_TRIG_SERIES_HPP
#define MSQSP_TRIG_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "msqsp/errors.hpp"

namespace msqsp {

enum class Parity { Even, Odd };

/*
 * A finite 2pi-periodic series in theta, either
 *
 *     even:  sum_{k=0}^{M} c_k cos(k theta)
 *     odd:   sum_{k=1}^{M} c_k sin(k theta)      (c_0 == 0 exactly)
 *
 * Coefficients are stored densely from k = 0; trailing zeros are allowed, so
 * degree() is the storage degree, not necessarily the exact one.
 */
template <typename Scalar>
class TrigSeries {
 public:
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Index = Eigen::Index;

  TrigSeries() : TrigSeries(Parity::Even, Coefficients::Zero(1)) {}

  TrigSeries(Parity parity, Coefficients coeffs)
      : parity_(parity), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) {
      throw InvalidSize("trig series needs at least one coefficient");
    }
    if (parity_ == Parity::Odd && coeffs_(0) != Scalar(0)) {
      throw InconsistentInput("odd series must have a zero k = 0 coefficient");
    }
  }

  static TrigSeries zero(Parity parity, Index degree) {
    return TrigSeries(parity, Coefficients::Zero(degree + 1));
  }

  static TrigSeries constant(Scalar value) {
    Coefficients c(1);
    c(0) = value;
    return TrigSeries(Parity::Even, std::move(c));
  }

  Parity parity() const { return parity_; }
  Index degree() const { return coeffs_.size() - 1; }
  const Coefficients& coeffs() const { return coeffs_; }

  /// Coefficient k, or zero beyond the stored degree.
  Scalar coeff(Index k) const {
    return (k >= 0 && k < coeffs_.size()) ? coeffs_(k) : Scalar(0);
  }

  Scalar operator()(Scalar theta) const;
  Scalar derivative(Scalar theta) const;

  /// Same series stored with (at least) the requested degree.
  TrigSeries padded(Index degree) const {
    if (degree <= this->degree()) return *this;
    Coefficients c = Coefficients::Zero(degree + 1);
    c.head(coeffs_.size()) = coeffs_;
    return TrigSeries(parity_, std::move(c));
  }

  /// Drops trailing coefficients with magnitude <= tol.
  TrigSeries trimmed(Scalar tol) const {
    Index last = degree();
    while (last > 0 && std::abs(coeffs_(last)) <= tol) --last;
    return TrigSeries(parity_, coeffs_.head(last + 1));
  }

  TrigSeries operator-() const { return TrigSeries(parity_, -coeffs_); }

  friend bool operator==(const TrigSeries& a, const TrigSeries& b) {
    return a.parity_ == b.parity_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Parity parity_;
  Coefficients coeffs_;
};

template <typename Scalar>
Scalar eval(const TrigSeries<Scalar>& s, Scalar theta) {
  using std::cos;
  using std::sin;
  Scalar sum(0);
  const auto& c = s.coeffs();
  if (s.parity() == Parity::Even) {
    for (Eigen::Index k = 0; k < c.size(); ++k) sum += c(k) * cos(Scalar(k) * theta);
  } else {
    for (Eigen::Index k = 1; k < c.size(); ++k) sum += c(k) * sin(Scalar(k) * theta);
  }
  return sum;
}

template <typename Scalar>
Scalar eval_derivative(const TrigSeries<Scalar>& s, Scalar theta) {
  using std::cos;
  using std::sin;
  Scalar sum(0);
  const auto& c = s.coeffs();
  for (Eigen::Index k = 1; k < c.size(); ++k) {
    const Scalar kk(k);
    sum += s.parity() == Parity::Even ? -kk * c(k) * sin(kk * theta)
                                      : kk * c(k) * cos(kk * theta);
  }
  return sum;
}

template <typename Scalar>
Scalar TrigSeries<Scalar>::operator()(Scalar theta) const {
  return eval(*this, theta);
}

template <typename Scalar>
Scalar TrigSeries<Scalar>::derivative(Scalar theta) const {
  return eval_derivative(*this, theta);
}

/*
 * Laurent polynomial sum_{k=-M}^{M} p_k z^k with complex coefficients.
 * On the unit circle z = e^{i theta} this is the complex form of a
 * trigonometric polynomial.
 */
template <typename Scalar>
class LaurentPoly {
 public:
  using Complex = std::complex<Scalar>;
  using Coefficients = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  using Index = Eigen::Index;

  explicit LaurentPoly(Index degree = 0)
      : coeffs_(Coefficients::Zero(2 * degree + 1)) {}

  /// Coefficients ordered from z^{-M} to z^{M}; the length must be odd.
  explicit LaurentPoly(Coefficients coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() % 2 == 0) {
      throw InvalidSize("Laurent coefficient vector must have odd length");
    }
  }

  Index degree() const { return (coeffs_.size() - 1) / 2; }
  const Coefficients& coeffs() const { return coeffs_; }

  Complex& operator[](Index k) { return coeffs_(k + degree()); }

  /// Coefficient of z^k, zero outside the stored range.
  Complex operator[](Index k) const {
    return std::abs(k) <= degree() ? coeffs_(k + degree()) : Complex(0);
  }

  Complex operator()(Complex z) const {
    // Horner on z^M p(z), then rescale.
    Complex acc(0);
    for (Index i = coeffs_.size() - 1; i >= 0; --i) acc = acc * z + coeffs_(i);
    return acc * std::pow(z, -Scalar(degree()));
  }

  /// True when p_k == conj(p_{-k}) for every k, i.e. p is real on |z| = 1.
  bool is_real_on_circle(Scalar tol) const {
    for (Index k = 0; k <= degree(); ++k) {
      if (std::abs((*this)[k] - std::conj((*this)[-k])) > tol) return false;
    }
    return true;
  }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(a.degree() + b.degree());
    for (Index i = 0; i < a.coeffs_.size(); ++i) {
      for (Index j = 0; j < b.coeffs_.size(); ++j) {
        out.coeffs_(i + j) += a.coeffs_(i) * b.coeffs_(j);
      }
    }
    return out;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(std::max(a.degree(), b.degree()));
    for (Index k = -out.degree(); k <= out.degree(); ++k) out[k] = a[k] + b[k];
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(std::max(a.degree(), b.degree()));
    for (Index k = -out.degree(); k <= out.degree(); ++k) out[k] = a[k] - b[k];
    return out;
  }

 private:
  Coefficients coeffs_;
};

/// cos k theta -> (z^k + z^-k)/2,  sin k theta -> (z^k - z^-k)/(2i).
template <typename Scalar>
LaurentPoly<Scalar> to_laurent(const TrigSeries<Scalar>& s) {
  using Complex = std::complex<Scalar>;
  const Eigen::Index m = s.degree();
  LaurentPoly<Scalar> p(m);
  if (s.parity() == Parity::Even) {
    p[0] = Complex(s.coeff(0));
    for (Eigen::Index k = 1; k <= m; ++k) {
      p[k] = Complex(s.coeff(k) / 2);
      p[-k] = Complex(s.coeff(k) / 2);
    }
  } else {
    for (Eigen::Index k = 1; k <= m; ++k) {
      p[k] = Complex(0, -s.coeff(k) / 2);
      p[-k] = Complex(0, s.coeff(k) / 2);
    }
  }
  return p;
}

/*
 * Inverse of to_laurent. Throws InconsistentInput when p is not real on the
 * circle or does not have the requested parity (checked to `tol` relative to
 * the largest coefficient).
 */
template <typename Scalar>
TrigSeries<Scalar> from_laurent(const LaurentPoly<Scalar>& p, Parity parity,
                                Scalar tol = Scalar(1e-12)) {
  using Coefficients = typename TrigSeries<Scalar>::Coefficients;
  const Eigen::Index m = p.degree();
  const Scalar scale = std::max(Scalar(1), p.coeffs().cwiseAbs().maxCoeff());
  const Scalar atol = tol * scale;
  if (!p.is_real_on_circle(atol)) {
    throw InconsistentInput("Laurent polynomial is not real on the unit circle");
  }
  Coefficients c = Coefficients::Zero(m + 1);
  if (parity == Parity::Even) {
    for (Eigen::Index k = 1; k <= m; ++k) {
      if (std::abs(p[k] - p[-k]) > atol) {
        throw InconsistentInput("Laurent polynomial is not even");
      }
      c(k) = std::real(p[k] + p[-k]);
    }
    c(0) = std::real(p[0]);
  } else {
    if (std::abs(p[0]) > atol) {
      throw InconsistentInput("Laurent polynomial is not odd");
    }
    for (Eigen::Index k = 1; k <= m; ++k) {
      if (std::abs(p[k] + p[-k]) > atol) {
        throw InconsistentInput("Laurent polynomial is not odd");
      }
      c(k) = std::real(std::complex<Scalar>(0, 1) * (p[k] - p[-k]));
    }
  }
  return TrigSeries<Scalar>(parity, std::move(c));
}

using Series = TrigSeries<double>;
using Laurent = LaurentPoly<double>;

}  // namespace msqsp

#endif  // MSQSP_TRIG_SERIES_HPP
