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

#include "fermbezzle/spectra.hpp"

namespace fermbezzle::spectra {

Covariance ladder(int n) {
  if (n < 1) throw Error("ladder needs n >= 1");
  RealVector w(n);
  for (int j = 1; j <= n; ++j) w[j - 1] = 1.0 - static_cast<double>(j) / n;
  return Covariance::diagonal(w);
}

Covariance xx_chain_half(int L) {
  if (L < 4 || L % 2 != 0) throw OddDimension("xx chain needs even L >= 4");
  RealMatrix hop = RealMatrix::Zero(L, L);
  for (int i = 0; i + 1 < L; ++i) hop(i, i + 1) = hop(i + 1, i) = -1.0;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(hop);
  const int half = L / 2;
  // Fermi sea: occupy the L/2 lowest modes (solver order is ascending).
  RealMatrix fermi = es.eigenvectors().leftCols(half) *
                     es.eigenvectors().leftCols(half).transpose();
  RealMatrix g = RealMatrix::Identity(half, half) -
                 fermi.topLeftCorner(half, half);
  return Covariance::validate(g.cast<Complex>());
}

Covariance random_covariance(int n, std::uint64_t seed) {
  if (n < 1) throw Error("random_covariance needs n >= 1");
  Rng rng(seed);
  Matrix u = haar_unitary(n, rng);
  RealVector w(n);
  for (int i = 0; i < n; ++i) w[i] = uniform01(rng);
  return Covariance::validate(
      hermitian_part(u * w.cast<Complex>().asDiagonal() * u.adjoint()));
}

}  // namespace fermbezzle::spectra
