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

#include "fermbezzle/bounds.hpp"

#include <cmath>

namespace fermbezzle::bounds {

double eta(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw DimensionMismatch("eta: dimension mismatch");
  const Matrix id = Matrix::Identity(a.rows(), a.cols());
  return (contraction_sqrt(id - a) * contraction_sqrt(b) -
          contraction_sqrt(a) * contraction_sqrt(id - b))
      .norm();
}

double eta(const Covariance& a, const Covariance& b) {
  return eta(a.matrix(), b.matrix());
}

BoundReport sandwich(const Covariance& a, const Covariance& b) {
  BoundReport r;
  r.eta = eta(a, b);
  r.lower = 1.0 - std::exp(-r.eta * r.eta / 2.0);
  r.upper = std::min(1.0, std::sqrt(2.0) * r.eta);
  r.convention = Convention::passive;
  return r;
}

BoundReport sandwich_selfdual(const Matrix& s, const Matrix& t) {
  BoundReport r;
  r.eta = eta(s, t);
  r.lower = 1.0 - std::exp(-r.eta * r.eta / 4.0);
  r.upper = std::min(1.0, r.eta);
  r.convention = Convention::selfdual;
  return r;
}

double ps_trick_bound(const Covariance& a, const Covariance& b, double delta) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("ps_trick_bound: dimension mismatch");
  if (!(delta > 0.0) || delta > 0.5)
    throw InvalidDelta("delta must lie in (0, 1/2]");
  auto confined = [&](const Covariance& c) {
    return c.eigenvalues().minCoeff() >= delta - 1e-12 &&
           c.eigenvalues().maxCoeff() <= 1.0 - delta + 1e-12;
  };
  if (!confined(a))
    throw WindowViolation("spectrum of A not inside [delta, 1-delta]");
  const double d2 = (a.matrix() - b.matrix()).squaredNorm();
  return (confined(b) ? 1.0 : 4.0) / delta * d2;
}

double eta_trace_norm_bound(const Matrix& s, const Matrix& t) {
  if (s.rows() != t.rows())
    throw DimensionMismatch("eta_trace_norm_bound: dimension mismatch");
  const double trace_norm =
      hermitian_eigenvalues_desc(s - t).cwiseAbs().sum();
  const double bound = 2.0 * trace_norm;
  const double e = eta(s, t);
  if (e * e > bound + 1e-9)
    throw Error("eta^2 exceeds 2||S-T||_1");
  return bound;
}

double bittel_bound(const Covariance& f, const Covariance& g) {
  if (f.dim() != g.dim())
    throw DimensionMismatch("bittel_bound: dimension mismatch");
  return hermitian_eigenvalues_desc(f.matrix() - g.matrix())
      .cwiseAbs()
      .sum();
}

double entropy_lower_bound(double eps) {
  if (!(eps > 0.0) || eps > 1.0) throw Error("eps must lie in (0, 1]");
  return std::floor(1.0 / (4.0 * eps)) * std::log(2.0);
}

double binary_entropy(double x) {
  double h = 0.0;
  if (x > 0.0) h -= x * std::log(x);
  if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x);
  return h;
}

}  // namespace fermbezzle::bounds
