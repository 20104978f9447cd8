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

#include <catch2/catch_amalgamated.hpp>

#include "fermbezzle/covariance.hpp"
#include "fermbezzle/fuzz.hpp"
#include "fermbezzle/spectra.hpp"

using namespace fermbezzle;

namespace {
RealVector vec(std::initializer_list<double> v) {
  RealVector out(static_cast<long>(v.size()));
  long i = 0;
  for (double x : v) out[i++] = x;
  return out;
}
}  // namespace

TEST_CASE("validate accepts and orders simple spectra") {
  const Covariance id = Covariance::identity(2);
  CHECK(id.eigenvalues()[0] == 1.0);
  CHECK(id.eigenvalues()[1] == 1.0);

  const Covariance d = Covariance::diagonal(vec({0.3, 0.7}));
  CHECK(d.eigenvalues()[0] == Catch::Approx(0.7));
  CHECK(d.eigenvalues()[1] == Catch::Approx(0.3));
}

TEST_CASE("validate rejects bad input") {
  CHECK_THROWS_AS(Covariance::diagonal(vec({1.5, 0.0})), SpectrumOutOfRange);
  CHECK_THROWS_AS(Covariance::diagonal(vec({-0.1})), SpectrumOutOfRange);
  Matrix m(2, 2);
  m << 0.5, 0.3, 0.1, 0.5;
  CHECK_THROWS_AS(Covariance::validate(m), NotHermitian);
}

TEST_CASE("validate is idempotent") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Covariance c = fuzz::random_covariance_rng(4, rng);
    const Covariance again = Covariance::validate(c.matrix());
    CHECK((c.matrix() - again.matrix()).norm() < 1e-14);
    CHECK((c.eigenvalues() - again.eigenvalues()).norm() < 1e-12);
  }
}

TEST_CASE("spectral density of the ladder is 1/n") {
  const auto rep = spectral_density(spectra::ladder(8));
  CHECK(rep.density == Catch::Approx(1.0 / 8).epsilon(1e-14));
  CHECK(rep.witness_x == 1.0);
}

TEST_CASE("spectral density picks gap midpoints and endpoints") {
  const auto mid = spectral_density(Covariance::diagonal(vec({0.0, 0.5, 1.0})));
  CHECK(mid.density == Catch::Approx(0.25));
  CHECK((mid.witness_x == Catch::Approx(0.25) ||
         mid.witness_x == Catch::Approx(0.75)));

  const auto end = spectral_density(Covariance::diagonal(vec({0.5})));
  CHECK(end.density == Catch::Approx(0.5));
  CHECK((end.witness_x == 0.0 || end.witness_x == 1.0));
}

TEST_CASE("density is bounded by the worst gap and below by pigeonhole") {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Covariance c = fuzz::random_covariance_rng(n, rng);
    const auto rep = spectral_density(c);
    CHECK(rep.density <= rep.worst_gap + 1e-15);
    CHECK(rep.density >= 1.0 / (2.0 * (n + 1)));
  }
}

TEST_CASE("clip_spectrum clamps eigenvalues and keeps eigenvectors") {
  const Covariance g = Covariance::diagonal(vec({1.0, 0.0}));
  const Covariance clipped = clip_spectrum(g, 0.1);
  CHECK(clipped.eigenvalues()[0] == Catch::Approx(0.9));
  CHECK(clipped.eigenvalues()[1] == Catch::Approx(0.1));
  CHECK((clipped.eigenvectors() - g.eigenvectors()).norm() == 0.0);

  const Covariance mid = clip_spectrum(Covariance::diagonal(vec({0.5})), 0.1);
  CHECK(mid.eigenvalues()[0] == Catch::Approx(0.5));

  const Covariance three =
      clip_spectrum(Covariance::diagonal(vec({0.95, 0.4, 0.02})), 0.05);
  CHECK(three.eigenvalues()[0] == Catch::Approx(0.95));
  CHECK(three.eigenvalues()[1] == Catch::Approx(0.4));
  CHECK(three.eigenvalues()[2] == Catch::Approx(0.05));

  CHECK_THROWS_AS(clip_spectrum(g, 0.0), InvalidDelta);
  CHECK_THROWS_AS(clip_spectrum(g, 0.6), InvalidDelta);
}

TEST_CASE("clipping never moves away from window-confined covariances") {
  Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const double delta = 0.05 + 0.4 * uniform01(rng);
    const Covariance g = fuzz::random_covariance_rng(n, rng);
    const Covariance x = fuzz::random_confined_covariance(n, delta, rng);
    const Covariance gd = clip_spectrum(g, delta);
    CHECK((gd.matrix() - x.matrix()).norm() <=
          (g.matrix() - x.matrix()).norm() + 1e-12);
  }
}

TEST_CASE("direct_sum stacks blocks and spectra") {
  const Covariance s =
      direct_sum(Covariance::identity(1), Covariance::zero(1));
  CHECK(s.eigenvalues()[0] == Catch::Approx(1.0));
  CHECK(s.eigenvalues()[1] == Catch::Approx(0.0));

  Rng rng(14);
  const Covariance a = fuzz::random_covariance_rng(3, rng);
  const Covariance b = fuzz::random_covariance_rng(2, rng);
  RealVector all = sorted_desc(concat(a.eigenvalues(), b.eigenvalues()));
  CHECK((direct_sum(a, b).eigenvalues() - all).norm() < 1e-10);
}

TEST_CASE("select_dense_subspace on the ladder") {
  const auto sel = select_dense_subspace(spectra::ladder(100), 0.1);
  CHECK(sel.indices.size() <= 20);
  CHECK(spectral_density(sel.restriction).density < 0.1);
}

TEST_CASE("select_dense_subspace keeps everything when small") {
  // dim 8 <= ceil(2/0.25): the whole spectrum is retained.
  const auto sel = select_dense_subspace(spectra::ladder(8), 0.25);
  CHECK(sel.indices.size() == 8);
}

TEST_CASE("select_dense_subspace requires a dense spectrum") {
  CHECK_THROWS_AS(
      select_dense_subspace(Covariance::diagonal(vec({0.5})), 0.4),
      NotDenseEnough);
}

TEST_CASE("subspace selection fuzz: size bound and restricted density") {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 40);
    const Covariance c = fuzz::random_covariance_rng(n, rng);
    const double density = spectral_density(c).density;
    const double eps =
        std::min(0.999, density * (2.05 + 2.0 * uniform01(rng)));
    if (spectral_density(c).density >= eps) continue;
    const auto sel = select_dense_subspace(c, eps);
    CHECK(static_cast<double>(sel.indices.size()) <= std::ceil(2.0 / eps));
    CHECK(spectral_density(sel.restriction).density < eps);
  }
}
