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

#ifndef FERMBEZZLE_EMBEZZLE_HPP
#define FERMBEZZLE_EMBEZZLE_HPP

#include <optional>
#include <vector>

#include "fermbezzle/covariance.hpp"

namespace fermbezzle::embezzle {

/// || lambda(A)_sorted - lambda(B)_sorted ||_p = inf_u || u A u^dag - B ||_p
/// (Wielandt); p in {1, 2, inf} selected as 1, 2, or 0 for infinity.
double sorted_eigen_distance(const Covariance& a, const Covariance& b, int p);
double sorted_vector_distance(const RealVector& a, const RealVector& b, int p);

struct InterleaveBound {
  double lhs = 0.0;  // ||(k+f)sorted - (k+g)sorted||_inf
  double rhs = 0.0;  // d * max consecutive gap of (padded) k
  bool padded = false;
};

/// Checks the sorted-interleaving bound for non-increasing vectors. When the
/// endpoint conditions k_1 >= f_1, g_1 and k_n <= f_d, g_d fail, k is padded
/// with max(k_1 + eps, 1) above and min(k_n - eps, 0) below, eps being the
/// measured spectral density of k.
InterleaveBound interleave_bound_check(const RealVector& k,
                                       const RealVector& f,
                                       const RealVector& g);

struct SortedSpectrumMatch {
  RealVector joint_source;  // (k + f) sorted non-increasingly
  RealVector joint_target;  // (k + g) sorted non-increasingly
  double linf_gap = 0.0;
  double l1_gap = 0.0;
};

struct EmbezzlementPlan {
  double delta = 0.0;
  double eps = 0.0;  // measured spectral density of K
  std::vector<int> subspace_indices;  // into K's non-increasing eigenorder
  std::vector<int> active_indices;    // subspace indices inside the
                                      // [delta, 1-delta] window
  std::vector<int> matching;  // position p of the active source list (K
                              // actives then F modes) pairs with position
                              // matching[p] of the target list
  Matrix unitary;             // (n+d) x (n+d); identity off the active block
  SortedSpectrumMatch match;  // active-block spectra
  double eta_achieved = 0.0;
  double certified_bound = 0.0;  // min(1, sqrt(2) eta)
  double theorem_bound = 0.0;    // 11 d eps^{1/4}
  // Inputs, retained so a serialized plan is self-contained.
  Matrix k_matrix, f_matrix, g_matrix;
};

/// The constructive protocol: delta from eps and d, dense-subspace selection,
/// window restriction, and the sorted-spectrum matching unitary
/// u = W_G W_F^dag on the active block. eta is evaluated directly on
/// u (K+F) u^dag vs K+G.
EmbezzlementPlan construct_plan(const Covariance& k, const Covariance& f,
                                const Covariance& g);

struct KappaEstimate {
  double kappa_upper = 1.0;     // best exact trace distance found
  double eta_min = 0.0;         // smallest eta seen during the search
  double sandwich_lower = 0.0;  // 1 - exp(-eta_min^2 / 2)
};

/// Heuristic upper estimate of kappa(F, G | K): sorted matchings (with tie
/// permutations) refined by random unitary perturbations. Exact Fock
/// evaluation; total modes <= 9.
KappaEstimate kappa_exact_small(const Covariance& k, const Covariance& f,
                                const Covariance& g, int restarts = 100,
                                std::uint64_t seed = 0);

/// Lifts a monopartite unitary u_A acting on the A marginal of two bipartite
/// pure passive states to the B side: u_B = v_S u_A v_T^dag with v the polar
/// unitaries of the off-diagonal blocks. Guarantees
/// eta(S, (u_A + u_B) T (u_A + u_B)^dag) = sqrt(2) eta(S_A, u_A T_A u_A^dag).
struct BipartiteLift {
  Matrix u_a;
  Matrix u_b;
};
BipartiteLift lift_to_bipartite(const Matrix& u_a, const Covariance& s_bip,
                                const Covariance& t_bip, int dim_a);

/// Builds the bipartite pure passive covariance with prescribed A marginal
/// and B-side basis rotation w: (1 + w) P_{G_A} (1 + w)^dag.
Covariance purify_passive(const Covariance& g_a, const Matrix& w_b);

struct NoGoReport {
  double lhs = 0.0;  // sorted l1 distance of (F+K, G+K)
  double rhs = 0.0;  // sorted l1 distance of (F, G)
};

/// The trace-distance-of-covariances obstruction: appending a common block
/// never shrinks the optimal covariance l1 distance.
NoGoReport covariance_distance_no_go(const Covariance& f, const Covariance& g,
                                     const Covariance& k);

}  // namespace fermbezzle::embezzle

#endif
