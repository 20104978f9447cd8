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

#ifndef FERMBEZZLE_COVARIANCE_HPP
#define FERMBEZZLE_COVARIANCE_HPP

#include <utility>
#include <vector>

#include "fermbezzle/errors.hpp"
#include "fermbezzle/linalg.hpp"

namespace fermbezzle {

/// Covariance of a passive (gauge-invariant) Gaussian state: a Hermitian
/// matrix G with 0 <= G <= 1, entries <a_i a_j^dag>. Immutable; the spectral
/// decomposition is computed once at construction and cached.
class Covariance {
 public:
  /// Validates Hermiticity (1e-12 Frobenius) and the spectral window
  /// [-1e-9, 1+1e-9]; eigenvalues are clamped to [0,1] afterwards.
  static Covariance validate(const Matrix& matrix);

  /// Rebuild from spectral data, bypassing the eigensolver. Used by
  /// operations that must preserve the eigenbasis exactly (clipping).
  static Covariance from_eigensystem(const RealVector& eigenvalues_desc,
                                     const Matrix& eigenvectors);

  static Covariance diagonal(const RealVector& eigenvalues);
  static Covariance identity(int dim);
  static Covariance zero(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  /// Non-increasing; column k of eigenvectors() matches eigenvalues()[k].
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const Matrix& eigenvectors() const { return eigenvectors_; }

 private:
  Covariance(Matrix m, RealVector w, Matrix v)
      : matrix_(std::move(m)),
        eigenvalues_(std::move(w)),
        eigenvectors_(std::move(v)) {}

  Matrix matrix_;
  RealVector eigenvalues_;
  Matrix eigenvectors_;
};

struct SpectralDensityReport {
  /// sup over x in [0,1] of the distance from x to the spectrum.
  double density = 0.0;
  /// Largest consecutive-eigenvalue gap, counting virtual endpoints 0 and 1.
  double worst_gap = 0.0;
  /// A point attaining the sup.
  double witness_x = 0.0;
};

SpectralDensityReport spectral_density(const Covariance& k);

/// Replace every eigenvalue lambda by min(max(lambda, delta), 1-delta),
/// keeping the eigenvectors. Requires 0 < delta <= 1/2.
Covariance clip_spectrum(const Covariance& g, double delta);

Covariance direct_sum(const Covariance& a, const Covariance& b);

struct SubspaceSelection {
  /// Indices into the non-increasing eigenvalue order of K.
  std::vector<int> indices;
  /// Diagonal restriction of K to the selected eigenvalues, in its eigenbasis.
  Covariance restriction;
};

/// Picks <= ceil(2/eps) eigenvalue indices whose restriction is still
/// eps-dense. Throws NotDenseEnough unless spectral_density(k).density < eps.
SubspaceSelection select_dense_subspace(const Covariance& k, double eps);

namespace detail {
/// Selection core without the density precondition; used by the embezzlement
/// construction where eps equals the measured density exactly.
std::vector<int> select_dense_indices(const RealVector& eigenvalues_desc,
                                      double eps);
}  // namespace detail

}  // namespace fermbezzle

#endif
