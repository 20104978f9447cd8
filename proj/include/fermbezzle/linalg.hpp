// Copyright 2026 The Fermbezzle Authors
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

#ifndef FERMBEZZLE_LINALG_HPP
#define FERMBEZZLE_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <random>

namespace fermbezzle {

using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;
using Rng = std::mt19937_64;

inline double frobenius(const Matrix& m) { return m.norm(); }

inline bool is_hermitian(const Matrix& m, double tol) {
  return (m - m.adjoint()).norm() <= tol;
}

/// Symmetrize away roundoff-level anti-Hermitian parts.
inline Matrix hermitian_part(const Matrix& m) {
  return 0.5 * (m + m.adjoint());
}

/// Eigenvalues of a Hermitian matrix, non-increasing.
inline RealVector hermitian_eigenvalues_desc(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

/// Spectral square root with negative eigenvalues clamped to zero.
inline Matrix hermitian_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
  RealVector w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * w.asDiagonal() *
         es.eigenvectors().adjoint();
}

/// Square root of a positive contraction (0 <= m <= 1 up to roundoff).
/// Eigenvalues within 1e-12 of the ends snap to 0 or 1, so projections keep
/// exact square roots despite the infinite slope of sqrt at 0.
inline Matrix contraction_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
  RealVector w = es.eigenvalues();
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] < 1e-12)
      w[i] = 0.0;
    else if (w[i] > 1.0 - 1e-12)
      w[i] = 1.0;
    else
      w[i] = std::sqrt(w[i]);
  }
  return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
}

inline double uniform01(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline double gaussian(Rng& rng) {
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

/// Haar-random unitary: QR of a complex Gaussian matrix with the phases of
/// diag(R) divided out.
inline Matrix haar_unitary(int n, Rng& rng) {
  Matrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      z(i, j) = Complex(gaussian(rng), gaussian(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= (a > 0) ? d / a : Complex(1, 0);
  }
  return q;
}

inline RealVector sorted_desc(RealVector v) {
  std::sort(v.data(), v.data() + v.size(), std::greater<double>());
  return v;
}

inline RealVector concat(const RealVector& a, const RealVector& b) {
  RealVector out(a.size() + b.size());
  out << a, b;
  return out;
}

}  // namespace fermbezzle

#endif
