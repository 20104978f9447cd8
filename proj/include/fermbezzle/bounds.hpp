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

#ifndef FERMBEZZLE_BOUNDS_HPP
#define FERMBEZZLE_BOUNDS_HPP

#include "fermbezzle/covariance.hpp"

namespace fermbezzle::bounds {

/// eta(A, B) = || sqrt(1-A) sqrt(B) - sqrt(A) sqrt(1-B) ||_HS.
/// Controls the trace distance of the corresponding Gaussian states from
/// both sides; symmetric; vanishes iff A = B.
double eta(const Matrix& a, const Matrix& b);
double eta(const Covariance& a, const Covariance& b);

enum class Convention { passive, selfdual };

/// Two-sided trace-distance bounds derived from eta. The passive convention
/// reads 1 - exp(-eta^2/2) <= dist <= sqrt(2) eta; the self-dual one has
/// exponent eta^2/4 and plain eta on the right (the two etas differ by a
/// factor sqrt(2), so the flag guards against silently mixing them).
struct BoundReport {
  double eta = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  Convention convention = Convention::passive;
};

BoundReport sandwich(const Covariance& a, const Covariance& b);
BoundReport sandwich_selfdual(const Matrix& s, const Matrix& t);

/// (4/delta) ||A-B||_HS^2, or (1/delta) ||A-B||_HS^2 when B is also confined
/// to [delta, 1-delta]; an upper bound on eta(A,B)^2. Requires the spectrum
/// of A inside the window.
double ps_trick_bound(const Covariance& a, const Covariance& b, double delta);

/// 2 ||S-T||_1; an upper bound on eta(S,T)^2 for positive contractions.
double eta_trace_norm_bound(const Matrix& s, const Matrix& t);

/// ||F-G||_1: the covariance trace-norm upper bound on the state trace
/// distance, for comparison against the eta sandwich.
double bittel_bound(const Covariance& f, const Covariance& g);

/// floor(1/(4 eps)) * log 2: entropy lower bound for eps-dense spectra (nats).
double entropy_lower_bound(double eps);

/// Binary entropy in nats.
double binary_entropy(double x);

}  // namespace fermbezzle::bounds

#endif
