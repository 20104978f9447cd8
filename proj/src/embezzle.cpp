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

#include "fermbezzle/embezzle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fermbezzle/bounds.hpp"
#include "fermbezzle/fock.hpp"

namespace fermbezzle::embezzle {

namespace {

std::vector<int> stable_order_desc(const RealVector& v) {
  std::vector<int> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return v[a] > v[b]; });
  return order;
}

bool is_sorted_desc(const RealVector& v) {
  for (int i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

double vector_density(const RealVector& sorted_desc_v) {
  double d = std::max(1.0 - sorted_desc_v[0],
                      sorted_desc_v[sorted_desc_v.size() - 1]);
  d = std::max(d, 0.0);
  for (int i = 0; i + 1 < sorted_desc_v.size(); ++i)
    d = std::max(d, (sorted_desc_v[i] - sorted_desc_v[i + 1]) / 2.0);
  return d;
}

Covariance covariance_from_hermitian_clamped(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m));
  const int n = static_cast<int>(m.rows());
  RealVector w(n);
  Matrix v(n, n);
  for (int i = 0; i < n; ++i) {
    w[i] = std::clamp(es.eigenvalues()[n - 1 - i], 0.0, 1.0);
    v.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return Covariance::from_eigensystem(w, v);
}

Matrix unitary_exp_ih(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Eigen::VectorXcd ph(h.rows());
  for (int i = 0; i < h.rows(); ++i)
    ph[i] = std::exp(Complex(0, t * es.eigenvalues()[i]));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix polar_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

double sorted_vector_distance(const RealVector& a, const RealVector& b,
                              int p) {
  if (a.size() != b.size())
    throw DimensionMismatch("sorted distance: length mismatch");
  RealVector diff = sorted_desc(a) - sorted_desc(b);
  switch (p) {
    case 1:
      return diff.cwiseAbs().sum();
    case 2:
      return diff.norm();
    case 0:
      return diff.cwiseAbs().maxCoeff();
    default:
      throw Error("norm selector must be 1, 2, or 0 (infinity)");
  }
}

double sorted_eigen_distance(const Covariance& a, const Covariance& b,
                             int p) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("sorted_eigen_distance: dimension mismatch");
  return sorted_vector_distance(a.eigenvalues(), b.eigenvalues(), p);
}

InterleaveBound interleave_bound_check(const RealVector& k,
                                       const RealVector& f,
                                       const RealVector& g) {
  if (f.size() != g.size())
    throw DimensionMismatch("interleave: f and g must have equal length");
  if (!is_sorted_desc(k) || !is_sorted_desc(f) || !is_sorted_desc(g))
    throw NotSorted("interleave inputs must be non-increasing");
  const int n = static_cast<int>(k.size());
  const long d = f.size();

  RealVector kt = k;
  InterleaveBound out;
  const bool top_ok = k[0] >= std::max(f[0], g[0]);
  const bool bot_ok = k[n - 1] <= std::min(f[d - 1], g[d - 1]);
  if (!top_ok || !bot_ok) {
    const double eps = vector_density(k);
    kt.resize(n + 2);
    kt[0] = std::max(k[0] + eps, 1.0);
    kt.segment(1, n) = k;
    kt[n + 1] = std::min(k[n - 1] - eps, 0.0);
    out.padded = true;
  }

  out.lhs = sorted_vector_distance(concat(kt, f), concat(kt, g), 0);
  const int m = static_cast<int>(kt.size());
  double mid = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m && j <= i + d; ++j)
      mid = std::max(mid, std::abs(kt[i] - kt[j]));
  double maxgap = 0.0;
  for (int i = 0; i + 1 < m; ++i) maxgap = std::max(maxgap, kt[i] - kt[i + 1]);
  out.rhs = static_cast<double>(d) * maxgap;
  if (out.lhs > mid + 1e-12 || mid > out.rhs + 1e-12)
    throw Error("interleaving bound chain violated");
  return out;
}

EmbezzlementPlan construct_plan(const Covariance& k, const Covariance& f,
                                const Covariance& g) {
  if (f.dim() != g.dim())
    throw DimensionMismatch("construct_plan: F and G dimensions differ");
  const int n = k.dim();
  const int d = f.dim();

  EmbezzlementPlan plan;
  plan.k_matrix = k.matrix();
  plan.f_matrix = f.matrix();
  plan.g_matrix = g.matrix();
  plan.eps = spectral_density(k).density;
  if (plan.eps >= 1.0) throw TrivialSpectrum("spectral density >= 1");
  plan.delta = std::min(
      0.5, 0.5 * std::sqrt(2.0 * d / plan.eps + double(d) * d) * plan.eps);
  plan.theorem_bound = 11.0 * d * std::pow(plan.eps, 0.25);

  plan.subspace_indices = detail::select_dense_indices(k.eigenvalues(),
                                                       plan.eps);
  for (int i : plan.subspace_indices) {
    const double lam = k.eigenvalues()[i];
    if (lam >= plan.delta && lam <= 1.0 - plan.delta)
      plan.active_indices.push_back(i);
  }

  // Active block: the windowed K eigenvectors plus the full d-mode ancilla.
  const int na = static_cast<int>(plan.active_indices.size());
  const int m = na + d;
  Matrix wf = Matrix::Zero(n + d, m), wg = Matrix::Zero(n + d, m);
  RealVector va(m), vb(m);
  for (int t = 0; t < na; ++t) {
    const int i = plan.active_indices[t];
    wf.col(t).head(n) = k.eigenvectors().col(i);
    wg.col(t).head(n) = k.eigenvectors().col(i);
    va[t] = k.eigenvalues()[i];
    vb[t] = k.eigenvalues()[i];
  }
  for (int j = 0; j < d; ++j) {
    wf.col(na + j).tail(d) = f.eigenvectors().col(j);
    wg.col(na + j).tail(d) = g.eigenvectors().col(j);
    va[na + j] = f.eigenvalues()[j];
    vb[na + j] = g.eigenvalues()[j];
  }

  const std::vector<int> oa = stable_order_desc(va);
  const std::vector<int> ob = stable_order_desc(vb);
  Matrix wfs(n + d, m), wgs(n + d, m);
  for (int s = 0; s < m; ++s) {
    wfs.col(s) = wf.col(oa[s]);
    wgs.col(s) = wg.col(ob[s]);
  }
  plan.matching.assign(m, 0);
  std::vector<int> rank_a(m);
  for (int s = 0; s < m; ++s) rank_a[oa[s]] = s;
  for (int p = 0; p < m; ++p) plan.matching[p] = ob[rank_a[p]];

  const Matrix proj = wfs * wfs.adjoint();
  plan.unitary = wgs * wfs.adjoint() +
                 (Matrix::Identity(n + d, n + d) - proj);

  plan.match.joint_source = sorted_desc(va);
  plan.match.joint_target = sorted_desc(vb);
  plan.match.linf_gap =
      (plan.match.joint_source - plan.match.joint_target).cwiseAbs().maxCoeff();
  plan.match.l1_gap =
      (plan.match.joint_source - plan.match.joint_target).cwiseAbs().sum();

  const Covariance a = direct_sum(k, f);
  const Covariance b = direct_sum(k, g);
  plan.eta_achieved = bounds::eta(
      hermitian_part(plan.unitary * a.matrix() * plan.unitary.adjoint()),
      b.matrix());
  plan.certified_bound = std::min(1.0, std::sqrt(2.0) * plan.eta_achieved);
  return plan;
}

KappaEstimate kappa_exact_small(const Covariance& k, const Covariance& f,
                                const Covariance& g, int restarts,
                                std::uint64_t seed) {
  if (f.dim() != g.dim())
    throw DimensionMismatch("kappa: F and G dimensions differ");
  const int total = k.dim() + f.dim();
  if (total > 9) throw TooManyModes("kappa_exact_small needs <= 9 modes");

  const Covariance a0 = direct_sum(k, f);
  const Covariance b = direct_sum(k, g);
  const fock::FockDensityMatrix rho_b = fock::gaussian_state(b);

  KappaEstimate est;
  est.eta_min = bounds::eta(a0, b);
  auto evaluate = [&](const Matrix& u) {
    const Matrix cov = u * a0.matrix() * u.adjoint();
    const Covariance c = covariance_from_hermitian_clamped(cov);
    const double e = bounds::eta(c.matrix(), b.matrix());
    est.eta_min = std::min(est.eta_min, e);
    return fock::trace_distance(fock::gaussian_state(c), rho_b);
  };

  Matrix best_u = Matrix::Identity(total, total);
  est.kappa_upper = evaluate(best_u);

  // The certified construction is always a candidate, so the estimate never
  // exceeds the plan's bound.
  {
    const Matrix u = construct_plan(k, f, g).unitary;
    const double dist = evaluate(u);
    if (dist < est.kappa_upper) {
      est.kappa_upper = dist;
      best_u = u;
    }
  }

  // Sorted matchings; enumerate permutations within eigenvalue ties of the
  // source spectrum (the matching is otherwise unique).
  {
    const RealVector& wa = a0.eigenvalues();
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < total; ++i) {
      if (!groups.empty() &&
          std::abs(wa[groups.back().front()] - wa[i]) <= 1e-12)
        groups.back().push_back(i);
      else
        groups.push_back({i});
    }
    std::vector<std::vector<int>> orders{{}};
    long budget = 1000;
    for (auto& grp : groups) {
      std::vector<int> perm = grp;
      std::vector<std::vector<int>> next;
      do {
        for (const auto& o : orders) {
          std::vector<int> ext = o;
          ext.insert(ext.end(), perm.begin(), perm.end());
          next.push_back(std::move(ext));
          if (static_cast<long>(next.size()) > budget) break;
        }
      } while (std::next_permutation(perm.begin(), perm.end()) &&
               static_cast<long>(next.size()) <= budget);
      orders = std::move(next);
      if (static_cast<long>(orders.size()) > budget) {
        orders.resize(1);
        break;
      }
    }
    for (const auto& order : orders) {
      Matrix va(total, total);
      for (int s = 0; s < total; ++s) va.col(s) = a0.eigenvectors().col(order[s]);
      const Matrix u = b.eigenvectors() * va.adjoint();
      const double dist = evaluate(u);
      if (dist < est.kappa_upper) {
        est.kappa_upper = dist;
        best_u = u;
      }
    }
  }

  for (int r = 0; r < restarts; ++r) {
    Rng rng(seed + static_cast<std::uint64_t>(r));
    Matrix u = best_u;
    double cur = est.kappa_upper;
    double step = 0.4 / (1.0 + (r % 4));
    for (int it = 0; it < 24; ++it) {
      Matrix h(total, total);
      for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j)
          h(i, j) = Complex(gaussian(rng), gaussian(rng));
      h = hermitian_part(h);
      const Matrix cand = u * unitary_exp_ih(h, step);
      const double dist = evaluate(cand);
      if (dist < cur) {
        cur = dist;
        u = cand;
      } else {
        step *= 0.8;
      }
    }
    if (cur < est.kappa_upper) {
      est.kappa_upper = cur;
      best_u = u;
    }
  }
  est.sandwich_lower = 1.0 - std::exp(-est.eta_min * est.eta_min / 2.0);
  return est;
}

Covariance purify_passive(const Covariance& g_a, const Matrix& w_b) {
  const int n = g_a.dim();
  if (w_b.rows() != n || w_b.cols() != n)
    throw DimensionMismatch("purify_passive: rotation has wrong size");
  const Matrix id = Matrix::Identity(n, n);
  const Matrix r = contraction_sqrt(g_a.matrix()) *
                   contraction_sqrt(id - g_a.matrix());
  Matrix big(2 * n, 2 * n);
  big.topLeftCorner(n, n) = g_a.matrix();
  big.topRightCorner(n, n) = r * w_b.adjoint();
  big.bottomLeftCorner(n, n) = w_b * r;
  big.bottomRightCorner(n, n) = w_b * (id - g_a.matrix()) * w_b.adjoint();
  return Covariance::validate(hermitian_part(big));
}

BipartiteLift lift_to_bipartite(const Matrix& u_a, const Covariance& s_bip,
                                const Covariance& t_bip, int dim_a) {
  const int n = s_bip.dim();
  if (t_bip.dim() != n)
    throw DimensionMismatch("bipartite states differ in dimension");
  if (2 * dim_a != n)
    throw DimensionMismatch("lift needs equal-sized marginals");
  if (u_a.rows() != dim_a)
    throw DimensionMismatch("u_A has the wrong size");
  for (const Covariance* c : {&s_bip, &t_bip}) {
    const Matrix& m = c->matrix();
    if ((m * m - m).norm() > 1e-9)
      throw NotBasisProjection("bipartite covariance is not pure");
    RealVector mu = hermitian_eigenvalues_desc(m.topLeftCorner(dim_a, dim_a));
    for (int i = 0; i < mu.size(); ++i)
      if (mu[i] < 1e-12 || mu[i] > 1.0 - 1e-12)
        throw NonFaithfulMarginal("A marginal has eigenvalue in {0, 1}");
  }
  const Matrix v_s =
      polar_unitary(s_bip.matrix().bottomLeftCorner(dim_a, dim_a));
  const Matrix v_t =
      polar_unitary(t_bip.matrix().bottomLeftCorner(dim_a, dim_a));
  return BipartiteLift{u_a, v_s * u_a * v_t.adjoint()};
}

NoGoReport covariance_distance_no_go(const Covariance& f, const Covariance& g,
                                     const Covariance& k) {
  if (f.dim() != g.dim())
    throw DimensionMismatch("no_go: F and G dimensions differ");
  NoGoReport rep;
  rep.lhs = sorted_vector_distance(concat(f.eigenvalues(), k.eigenvalues()),
                                   concat(g.eigenvalues(), k.eigenvalues()), 1);
  rep.rhs = sorted_eigen_distance(f, g, 1);
  if (rep.lhs < rep.rhs - 1e-12)
    throw Error("no-go inequality violated");
  return rep;
}

}  // namespace fermbezzle::embezzle
