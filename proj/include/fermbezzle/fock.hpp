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

#ifndef FERMBEZZLE_FOCK_HPP
#define FERMBEZZLE_FOCK_HPP

#include "fermbezzle/covariance.hpp"

namespace fermbezzle::fock {

// Dense 2^n x 2^n matrices: exact but exponential, for desk-scale
// verification only. Occupation basis: mode 1 is the least significant bit
// of the basis index, and |I> = adag_{i_1} ... adag_{i_k} |vac> with
// i_1 < ... < i_k.
inline constexpr int kDefaultCap = 12;

struct FockDensityMatrix {
  int modes = 0;
  Matrix matrix;  // Hermitian, PSD, trace 1

  static FockDensityMatrix validate(int modes, Matrix m);
};

struct FockUnitary {
  int modes = 0;
  Matrix matrix;  // unitary; passive lifts are block diagonal in N

  static FockUnitary validate(int modes, Matrix m);
};

struct NumberDistribution {
  /// probabilities[k] = P(total fermion number = k), k = 0..n.
  RealVector probabilities;
};

/// Exact density matrix of the passive Gaussian state with covariance G.
FockDensityMatrix gaussian_state(const Covariance& g, int cap = kDefaultCap);

/// Second quantization: <J| Gamma(u) |I> = det u_{J,I} between equal particle
/// numbers, zero otherwise.
FockUnitary fock_unitary(const Matrix& u, int cap = kDefaultCap);

double trace_distance(const FockDensityMatrix& rho,
                      const FockDensityMatrix& sigma);

/// (tr sqrt(rho) sqrt(sigma))^2.
double transition_probability(const FockDensityMatrix& rho,
                              const FockDensityMatrix& sigma);

/// von Neumann entropy in nats.
double entropy(const FockDensityMatrix& rho);

/// Poisson-binomial distribution of the total fermion number, from the
/// covariance eigenvalues alone (occupation probabilities 1 - lambda_j).
NumberDistribution number_distribution(const Covariance& g);

double total_variation(const NumberDistribution& p,
                       const NumberDistribution& q);

double mean(const NumberDistribution& p);

/// adag_i as a Fock matrix (i is 1-based); building block for test oracles.
Matrix creation_operator(int i, int modes);

}  // namespace fermbezzle::fock

#endif
