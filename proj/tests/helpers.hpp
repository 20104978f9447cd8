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

#ifndef FERMBEZZLE_TESTS_HELPERS_HPP
#define FERMBEZZLE_TESTS_HELPERS_HPP

#include <vector>

#include "fermbezzle/covariance.hpp"
#include "fermbezzle/fock.hpp"
#include "fermbezzle/selfdual.hpp"

namespace fermbezzle::testutil {

inline Matrix annihilation_operator(int i, int modes) {
  return fock::creation_operator(i, modes).adjoint();
}

/// Operator product for a creation/annihilation pattern, left to right.
inline Matrix pattern_operator(const std::vector<selfdual::FieldOp>& pattern,
                               int modes) {
  const long dim = 1L << modes;
  Matrix op = Matrix::Identity(dim, dim);
  for (const auto& fo : pattern)
    op *= fo.dagger ? fock::creation_operator(fo.mode, modes)
                    : annihilation_operator(fo.mode, modes);
  return op;
}

/// Independent Wick oracle: tr(rho * op) evaluated with explicit Fock
/// operator products.
inline Complex brute_force_moment(const fock::FockDensityMatrix& rho,
                                  const std::vector<selfdual::FieldOp>& pat) {
  return (rho.matrix * pattern_operator(pat, rho.modes)).trace();
}

/// Kronecker product with the A factor on the low bits (mode 1 = LSB), so
/// that kron_modes(rho_A, rho_B) represents A-modes-first ordering.
inline Matrix kron_modes(const Matrix& a, const Matrix& b) {
  const long da = a.rows(), db = b.rows();
  Matrix out(da * db, da * db);
  for (long rb = 0; rb < db; ++rb)
    for (long cb = 0; cb < db; ++cb)
      out.block(rb * da, cb * da, da, da) = b(rb, cb) * a;
  return out;
}

/// Reduce to the first `keep` modes (low bits), tracing out the rest.
inline Matrix partial_trace_keep_low(const Matrix& rho, int modes, int keep) {
  const long dk = 1L << keep;
  const long denv = 1L << (modes - keep);
  Matrix out = Matrix::Zero(dk, dk);
  for (long e = 0; e < denv; ++e)
    out += rho.block(e * dk, e * dk, dk, dk);
  return out;
}

}  // namespace fermbezzle::testutil

#endif
