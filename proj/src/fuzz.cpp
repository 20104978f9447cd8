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

#include "fermbezzle/fuzz.hpp"

#include <cmath>
#include <sstream>

#include "fermbezzle/bounds.hpp"
#include "fermbezzle/embezzle.hpp"
#include "fermbezzle/selfdual.hpp"

namespace fermbezzle::fuzz {

namespace {

RealVector random_sorted(int n, Rng& rng) {
  RealVector v(n);
  for (int i = 0; i < n; ++i) v[i] = uniform01(rng);
  return sorted_desc(v);
}

int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Covariance random_covariance_rng(int n, Rng& rng) {
  Matrix u = haar_unitary(n, rng);
  RealVector w(n);
  for (int i = 0; i < n; ++i) w[i] = uniform01(rng);
  return Covariance::validate(
      hermitian_part(u * w.cast<Complex>().asDiagonal() * u.adjoint()));
}

Covariance random_confined_covariance(int n, double delta, Rng& rng) {
  Matrix u = haar_unitary(n, rng);
  RealVector w(n);
  for (int i = 0; i < n; ++i)
    w[i] = delta + (1.0 - 2.0 * delta) * uniform01(rng);
  return Covariance::validate(
      hermitian_part(u * w.cast<Complex>().asDiagonal() * u.adjoint()));
}

FuzzReport list_sort(long iterations, std::uint64_t seed) {
  Rng rng(seed);
  FuzzReport rep;
  for (long it = 0; it < iterations; ++it) {
    ++rep.iterations;
    const int n = rand_int(rng, 1, 12);
    const int d = rand_int(rng, 1, 4);
    const RealVector k = random_sorted(n, rng);
    const RealVector f = random_sorted(d, rng);
    const RealVector g = random_sorted(d, rng);
    try {
      const auto b = embezzle::interleave_bound_check(k, f, g);
      if (b.lhs > b.rhs + 1e-12) throw Error("lhs above rhs");
    } catch (const Error& e) {
      if (rep.failures++ == 0) {
        std::ostringstream ss;
        ss << "iteration " << it << ": " << e.what();
        rep.detail = ss.str();
      }
    }
  }
  return rep;
}

FuzzReport no_go(long iterations, std::uint64_t seed) {
  Rng rng(seed);
  FuzzReport rep;
  for (long it = 0; it < iterations; ++it) {
    ++rep.iterations;
    const int d = rand_int(rng, 1, 5);
    const int n = rand_int(rng, 1, 8);
    double lhs, rhs;
    if (it % 128 == 0) {
      // Occasionally exercise the full matrix path.
      const Covariance f = random_covariance_rng(d, rng);
      const Covariance g = random_covariance_rng(d, rng);
      const Covariance k = random_covariance_rng(n, rng);
      try {
        const auto r = embezzle::covariance_distance_no_go(f, g, k);
        lhs = r.lhs;
        rhs = r.rhs;
      } catch (const Error&) {
        lhs = -1.0;
        rhs = 0.0;
      }
    } else {
      const RealVector f = random_sorted(d, rng);
      const RealVector g = random_sorted(d, rng);
      const RealVector k = random_sorted(n, rng);
      lhs = embezzle::sorted_vector_distance(concat(f, k), concat(g, k), 1);
      rhs = embezzle::sorted_vector_distance(f, g, 1);
    }
    if (lhs < rhs - 1e-12) {
      if (rep.failures++ == 0) {
        std::ostringstream ss;
        ss << "iteration " << it << ": lhs " << lhs << " < rhs " << rhs;
        rep.detail = ss.str();
      }
    }
  }
  return rep;
}

FuzzReport ps_trick(long iterations, std::uint64_t seed) {
  Rng rng(seed);
  FuzzReport rep;
  for (long it = 0; it < iterations; ++it) {
    ++rep.iterations;
    const int n = rand_int(rng, 1, 6);
    const double delta = 0.01 + 0.48 * uniform01(rng);
    const Covariance a = random_confined_covariance(n, delta, rng);
    const bool both = rand_int(rng, 0, 1) == 1;
    const Covariance b = both ? random_confined_covariance(n, delta, rng)
                              : random_covariance_rng(n, rng);
    const double e = bounds::eta(a, b);
    const double bound = bounds::ps_trick_bound(a, b, delta);
    if (e * e > bound + 1e-9) {
      if (rep.failures++ == 0) {
        std::ostringstream ss;
        ss << "iteration " << it << ": eta^2 " << e * e << " > bound "
           << bound << " (delta " << delta << ")";
        rep.detail = ss.str();
      }
    }
  }
  return rep;
}

FuzzReport eta_props(long iterations, std::uint64_t seed) {
  Rng rng(seed);
  FuzzReport rep;
  for (long it = 0; it < iterations; ++it) {
    ++rep.iterations;
    const int n = rand_int(rng, 1, 4);
    const int m = rand_int(rng, 1, 3);
    const Covariance a = random_covariance_rng(n, rng);
    const Covariance b = random_covariance_rng(n, rng);
    const Covariance c = random_covariance_rng(m, rng);
    const Matrix u = haar_unitary(n, rng);

    const double e = bounds::eta(a, b);
    double err = std::abs(bounds::eta(direct_sum(a, c), direct_sum(b, c)) - e);
    err = std::max(err, std::abs(bounds::eta(
                             hermitian_part(u * a.matrix() * u.adjoint()),
                             hermitian_part(u * b.matrix() * u.adjoint())) -
                         e));
    const Matrix pa = selfdual::purification_projection(a).matrix();
    const Matrix pb = selfdual::purification_projection(b).matrix();
    const double ep = bounds::eta(pa, pb);
    err = std::max(err, std::abs(ep * ep - 2.0 * e * e));
    err = std::max(err, std::abs(selfdual::eta_from_rotation_unitaries(
                             a.matrix(), b.matrix()) -
                         e));
    if (err > 1e-10) {
      if (rep.failures++ == 0) {
        std::ostringstream ss;
        ss << "iteration " << it << ": identity residual " << err;
        rep.detail = ss.str();
      }
    }
  }
  return rep;
}

}  // namespace fermbezzle::fuzz
