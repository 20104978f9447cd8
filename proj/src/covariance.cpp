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

#include "fermbezzle/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace fermbezzle {

namespace {
constexpr double kHermTol = 1e-12;
constexpr double kRangeTol = 1e-9;
constexpr double kDiagTol = 1e-10;
}  // namespace

Covariance Covariance::validate(const Matrix& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0)
    throw Error("covariance matrix must be square and non-empty");
  if ((matrix - matrix.adjoint()).norm() > kHermTol)
    throw NotHermitian("covariance is not Hermitian to 1e-12");

  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(matrix));
  RealVector w = es.eigenvalues();
  if (w.minCoeff() < -kRangeTol || w.maxCoeff() > 1.0 + kRangeTol)
    throw SpectrumOutOfRange("eigenvalue outside [-1e-9, 1+1e-9]");

  // Reverse the solver's ascending order; reversal is deterministic, which
  // fixes tie order for degenerate eigenvalues.
  const int n = static_cast<int>(w.size());
  RealVector wd(n);
  Matrix vd(n, n);
  for (int i = 0; i < n; ++i) {
    wd[i] = std::clamp(w[n - 1 - i], 0.0, 1.0);
    vd.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  if ((vd.adjoint() * matrix * vd - Matrix(wd.cast<Complex>().asDiagonal()))
          .norm() > kDiagTol)
    throw Error("eigendecomposition residual above 1e-10");
  return Covariance(hermitian_part(matrix), std::move(wd), std::move(vd));
}

Covariance Covariance::from_eigensystem(const RealVector& eigenvalues_desc,
                                        const Matrix& eigenvectors) {
  Matrix m = eigenvectors *
             eigenvalues_desc.cast<Complex>().asDiagonal() *
             eigenvectors.adjoint();
  return Covariance(hermitian_part(m), eigenvalues_desc, eigenvectors);
}

Covariance Covariance::diagonal(const RealVector& eigenvalues) {
  return validate(Matrix(eigenvalues.cast<Complex>().asDiagonal()));
}

Covariance Covariance::identity(int dim) {
  return validate(Matrix::Identity(dim, dim));
}

Covariance Covariance::zero(int dim) {
  return validate(Matrix::Zero(dim, dim));
}

SpectralDensityReport spectral_density(const Covariance& k) {
  const RealVector& w = k.eigenvalues();
  const int n = k.dim();
  SpectralDensityReport rep;

  rep.density = 1.0 - w[0];
  rep.witness_x = 1.0;
  if (w[n - 1] > rep.density) {
    rep.density = w[n - 1];
    rep.witness_x = 0.0;
  }
  rep.worst_gap = std::max(1.0 - w[0], w[n - 1]);
  for (int i = 0; i + 1 < n; ++i) {
    double gap = w[i] - w[i + 1];
    rep.worst_gap = std::max(rep.worst_gap, gap);
    if (gap / 2.0 > rep.density) {
      rep.density = gap / 2.0;
      rep.witness_x = (w[i] + w[i + 1]) / 2.0;
    }
  }
  return rep;
}

Covariance clip_spectrum(const Covariance& g, double delta) {
  if (!(delta > 0.0) || delta > 0.5)
    throw InvalidDelta("delta must lie in (0, 1/2]");
  RealVector w = g.eigenvalues();
  for (int i = 0; i < w.size(); ++i)
    w[i] = std::clamp(w[i], delta, 1.0 - delta);
  return Covariance::from_eigensystem(w, g.eigenvectors());
}

Covariance direct_sum(const Covariance& a, const Covariance& b) {
  const int na = a.dim(), nb = b.dim();
  Matrix m = Matrix::Zero(na + nb, na + nb);
  m.topLeftCorner(na, na) = a.matrix();
  m.bottomRightCorner(nb, nb) = b.matrix();
  return Covariance::validate(m);
}

namespace detail {

namespace {
double restricted_density(const RealVector& w, const std::vector<int>& idx) {
  RealVector sel(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) sel[static_cast<int>(i)] = w[idx[i]];
  sel = sorted_desc(sel);
  double d = std::max(1.0 - sel[0], sel[sel.size() - 1]);
  for (int i = 0; i + 1 < sel.size(); ++i)
    d = std::max(d, (sel[i] - sel[i + 1]) / 2.0);
  return d;
}

// Frontier sweep: starting from the eigenvalue nearest 0, repeatedly take the
// largest eigenvalue below the current value + 2*eps. Produces consecutive
// gaps < 2*eps and endpoint distances < eps whenever the full spectrum has
// density < eps, with ~1/eps selections.
std::vector<int> sweep_select(const RealVector& w, double eps) {
  const int n = static_cast<int>(w.size());
  // w is non-increasing; walk from the bottom (index n-1) upward.
  int cur = n - 1;
  for (int i = n - 1; i >= 0; --i)
    if (std::abs(w[i]) < std::abs(w[cur])) cur = i;
  std::vector<int> out{cur};
  while (true) {
    int best = -1;
    for (int i = cur - 1; i >= 0; --i) {
      if (w[i] <= w[cur]) continue;
      if (w[i] < w[cur] + 2.0 * eps) best = (best < 0 || w[i] > w[best]) ? i : best;
    }
    if (best < 0) break;
    out.push_back(best);
    cur = best;
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

std::vector<int> select_dense_indices(const RealVector& w, double eps) {
  const int n = static_cast<int>(w.size());
  const double bound = std::ceil(2.0 / eps);
  if (static_cast<double>(n) <= bound) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }

  // Greedy over the grid x_m = (2m-1) eps/2: each grid point claims the
  // nearest eigenvalue not yet selected.
  std::set<int> selected;
  for (int m = 1; (2 * m - 1) * eps / 2.0 <= 1.0; ++m) {
    const double x = (2 * m - 1) * eps / 2.0;
    int best = -1;
    double bestDist = 0.0;
    for (int i = 0; i < n; ++i) {
      if (selected.count(i)) continue;
      double d = std::abs(w[i] - x);
      if (best < 0 || d < bestDist) {
        best = i;
        bestDist = d;
      }
    }
    if (best >= 0) selected.insert(best);
    if (static_cast<double>(selected.size()) >= bound) break;
  }
  std::vector<int> idx(selected.begin(), selected.end());

  // The grid greedy meets the size bound by construction but can miss the
  // density target when eps is close to the measured density; fall back to
  // the frontier sweep in that case.
  if (restricted_density(w, idx) >= eps) {
    std::vector<int> alt = sweep_select(w, eps);
    if (restricted_density(w, alt) < restricted_density(w, idx) &&
        static_cast<double>(alt.size()) <= bound)
      idx = std::move(alt);
  }
  return idx;
}

}  // namespace detail

SubspaceSelection select_dense_subspace(const Covariance& k, double eps) {
  if (!(eps > 0.0)) throw Error("eps must be positive");
  if (spectral_density(k).density >= eps)
    throw NotDenseEnough("spectral density is not below eps");
  std::vector<int> idx = detail::select_dense_indices(k.eigenvalues(), eps);
  RealVector sel(idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    sel[static_cast<int>(i)] = k.eigenvalues()[idx[i]];
  return SubspaceSelection{std::move(idx), Covariance::diagonal(sel)};
}

}  // namespace fermbezzle
