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

#ifndef FERMBEZZLE_SPECTRA_HPP
#define FERMBEZZLE_SPECTRA_HPP

#include "fermbezzle/covariance.hpp"

namespace fermbezzle::spectra {

/// diag(1-1/n, 1-2/n, ..., 0): the densest spectrum n modes can carry,
/// spectral density exactly 1/n.
Covariance ladder(int n);

/// Ground-state covariance of the left half of an open, half-filled hopping
/// chain with L sites (L even, >= 4). Returns G = 1 - C restricted to the
/// first L/2 sites, where C is the Fermi projector onto the L/2 lowest
/// single-particle modes.
Covariance xx_chain_half(int L);

/// Haar-conjugated uniform spectrum; deterministic per seed.
Covariance random_covariance(int n, std::uint64_t seed);

}  // namespace fermbezzle::spectra

#endif
