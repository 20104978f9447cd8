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

#ifndef FERMBEZZLE_FUZZ_HPP
#define FERMBEZZLE_FUZZ_HPP

#include <cstdint>
#include <string>

#include "fermbezzle/covariance.hpp"

namespace fermbezzle::fuzz {

struct FuzzReport {
  long iterations = 0;
  long failures = 0;
  std::string detail;  // description of the first failure, if any
};

/// Sorted-interleaving bound on random non-increasing triples, with endpoint
/// padding whenever the boundary conditions fail.
FuzzReport list_sort(long iterations, std::uint64_t seed);

/// l1 sorted-eigenvalue monotonicity: appending a common block never shrinks
/// the optimal covariance distance.
FuzzReport no_go(long iterations, std::uint64_t seed);

/// eta(A,B)^2 <= (4/delta) ||A-B||_2^2 for window-confined A (and the
/// 1/delta variant when B is confined too).
FuzzReport ps_trick(long iterations, std::uint64_t seed);

/// Direct-sum invariance, unitary invariance, purification doubling and the
/// rotation-unitary identity for eta, each to 1e-10.
FuzzReport eta_props(long iterations, std::uint64_t seed);

/// Random covariance with spectrum confined to [delta, 1-delta].
Covariance random_confined_covariance(int n, double delta, Rng& rng);

Covariance random_covariance_rng(int n, Rng& rng);

}  // namespace fermbezzle::fuzz

#endif
