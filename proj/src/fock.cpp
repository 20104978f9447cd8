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

#include "fermbezzle/fock.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace fermbezzle::fock {

namespace {

std::vector<int> set_bits(unsigned mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

Complex minor_det(const Matrix& u, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) return Complex(1, 0);
  if (k == 1) return u(rows[0], cols[0]);
  Matrix sub(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub(r, c) = u(rows[r], cols[c]);
  if (k == 2) return sub(0, 0) * sub(1, 1) - sub(0, 1) * sub(1, 0);
  return Eigen::PartialPivLU<Matrix>(sub).determinant();
}

}  // namespace

FockDensityMatrix FockDensityMatrix::validate(int modes, Matrix m) {
  const long dim = 1L << modes;
  if (m.rows() != dim || m.cols() != dim)
    throw DimensionMismatch("density matrix has wrong dimension");
  if ((m - m.adjoint()).norm() > 1e-10)
    throw NotHermitian("density matrix not Hermitian to 1e-10");
  if (std::abs(m.trace().real() - 1.0) > 1e-10 ||
      std::abs(m.trace().imag()) > 1e-10)
    throw Error("density matrix trace differs from 1");
  if (hermitian_eigenvalues_desc(m).minCoeff() < -1e-9)
    throw Error("density matrix has eigenvalue below -1e-9");
  return FockDensityMatrix{modes, std::move(m)};
}

FockUnitary FockUnitary::validate(int modes, Matrix m) {
  const long dim = 1L << modes;
  if (m.rows() != dim || m.cols() != dim)
    throw DimensionMismatch("Fock unitary has wrong dimension");
  const double err =
      (m.adjoint() * m - Matrix::Identity(dim, dim)).norm() /
      std::sqrt(static_cast<double>(dim));
  if (err > 1e-9) throw NotUnitary("Fock operator not unitary to 1e-9");
  return FockUnitary{modes, std::move(m)};
}

FockUnitary fock_unitary(const Matrix& u, int cap) {
  const int n = static_cast<int>(u.rows());
  if (u.rows() != u.cols()) throw Error("single-particle matrix not square");
  if (n > cap) throw TooManyModes("mode count exceeds the Fock cap");
  if ((u.adjoint() * u - Matrix::Identity(n, n)).norm() > 1e-10 * n)
    throw NotUnitary("single-particle matrix not unitary to 1e-10");

  const unsigned dim = 1u << n;
  Matrix big = Matrix::Zero(dim, dim);
  // Block diagonal in total particle number: group masks by popcount.
  std::vector<std::vector<unsigned>> by_count(n + 1);
  for (unsigned m = 0; m < dim; ++m)
    by_count[std::popcount(m)].push_back(m);
  for (int k = 0; k <= n; ++k) {
    for (unsigned col : by_count[k]) {
      const std::vector<int> cols = set_bits(col, n);
      for (unsigned row : by_count[k]) {
        big(row, col) = minor_det(u, set_bits(row, n), cols);
      }
    }
  }
  return FockUnitary::validate(n, std::move(big));
}

FockDensityMatrix gaussian_state(const Covariance& g, int cap) {
  const int n = g.dim();
  if (n > cap) throw TooManyModes("mode count exceeds the Fock cap");
  const unsigned dim = 1u << n;
  const RealVector& lam = g.eigenvalues();

  // Product state in the eigenbasis: mode i holds |0><0| with weight
  // lambda_i (as <a a^dag> = lambda) and |1><1| with weight 1 - lambda_i.
  RealVector diag(dim);
  for (unsigned m = 0; m < dim; ++m) {
    double p = 1.0;
    for (int i = 0; i < n; ++i)
      p *= (m & (1u << i)) ? (1.0 - lam[i]) : lam[i];
    diag[m] = p;
  }
  FockUnitary rot = fock_unitary(g.eigenvectors(), cap);
  Matrix rho = rot.matrix * diag.cast<Complex>().asDiagonal() *
               rot.matrix.adjoint();
  return FockDensityMatrix::validate(n, hermitian_part(rho));
}

double trace_distance(const FockDensityMatrix& rho,
                      const FockDensityMatrix& sigma) {
  if (rho.modes != sigma.modes)
    throw DimensionMismatch("trace_distance: mode mismatch");
  return 0.5 *
         hermitian_eigenvalues_desc(rho.matrix - sigma.matrix)
             .cwiseAbs()
             .sum();
}

double transition_probability(const FockDensityMatrix& rho,
                              const FockDensityMatrix& sigma) {
  if (rho.modes != sigma.modes)
    throw DimensionMismatch("transition_probability: mode mismatch");
  const double t =
      (hermitian_sqrt(rho.matrix) * hermitian_sqrt(sigma.matrix))
          .trace()
          .real();
  return std::clamp(t * t, 0.0, 1.0);
}

double entropy(const FockDensityMatrix& rho) {
  RealVector w = hermitian_eigenvalues_desc(rho.matrix);
  double h = 0.0;
  for (int i = 0; i < w.size(); ++i)
    if (w[i] > 1e-14) h -= w[i] * std::log(w[i]);
  return h;
}

NumberDistribution number_distribution(const Covariance& g) {
  const int n = g.dim();
  RealVector probs = RealVector::Zero(n + 1);
  probs[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    const double p = 1.0 - g.eigenvalues()[i];  // occupation probability
    for (int k = std::min(i + 1, n); k >= 1; --k)
      probs[k] = probs[k] * (1.0 - p) + probs[k - 1] * p;
    probs[0] *= (1.0 - p);
  }
  return NumberDistribution{std::move(probs)};
}

double total_variation(const NumberDistribution& p,
                       const NumberDistribution& q) {
  const long n = std::max(p.probabilities.size(), q.probabilities.size());
  double tv = 0.0;
  for (long k = 0; k < n; ++k) {
    const double a = k < p.probabilities.size() ? p.probabilities[k] : 0.0;
    const double b = k < q.probabilities.size() ? q.probabilities[k] : 0.0;
    tv += std::abs(a - b);
  }
  return tv / 2.0;
}

double mean(const NumberDistribution& p) {
  double m = 0.0;
  for (long k = 0; k < p.probabilities.size(); ++k)
    m += static_cast<double>(k) * p.probabilities[k];
  return m;
}

Matrix creation_operator(int i, int modes) {
  if (i < 1 || i > modes) throw Error("mode index out of range");
  const unsigned dim = 1u << modes;
  const unsigned bit = 1u << (i - 1);
  Matrix m = Matrix::Zero(dim, dim);
  for (unsigned s = 0; s < dim; ++s) {
    if (s & bit) continue;
    const int lower = std::popcount(s & (bit - 1));
    m(s | bit, s) = (lower % 2 == 0) ? 1.0 : -1.0;
  }
  return m;
}

}  // namespace fermbezzle::fock
