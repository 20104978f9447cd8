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

#include "fermbezzle/selfdual.hpp"

#include <cmath>

namespace fermbezzle::selfdual {

namespace {
constexpr double kTol = 1e-10;

RealVector eigs_asc(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(m),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

template <typename MatT>
typename MatT::Scalar pfaffian_impl(MatT a) {
  using Scalar = typename MatT::Scalar;
  const long n = a.rows();
  if (n != a.cols()) throw Error("pfaffian: matrix not square");
  if (n % 2 != 0) throw OddDimension("pfaffian needs even dimension");
  if ((a + a.transpose()).norm() > 1e-12 * std::max<double>(1.0, a.norm()))
    throw NotAntisymmetric("pfaffian input not antisymmetric");
  if (n == 0) return Scalar(1);

  Scalar pf(1);
  for (long k = 0; k + 1 < n; k += 2) {
    // Pivot the largest entry of column k below the diagonal into (k+1, k).
    long p = k + 1;
    for (long i = k + 2; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (std::abs(a(p, k)) == 0.0) return Scalar(0);
    if (p != k + 1) {
      a.row(p).swap(a.row(k + 1));
      a.col(p).swap(a.col(k + 1));
      pf = -pf;
    }
    const Scalar pivot = a(k + 1, k);
    for (long i = k + 2; i < n; ++i) {
      const Scalar tau = a(i, k) / pivot;
      a.row(i) -= tau * a.row(k + 1);
      a.col(i) -= tau * a.col(k + 1);
    }
    pf *= a(k, k + 1);
  }
  return pf;
}
}  // namespace

Matrix standard_conjugation(int m) {
  Matrix x = Matrix::Zero(2 * m, 2 * m);
  x.topRightCorner(m, m) = Matrix::Identity(m, m);
  x.bottomLeftCorner(m, m) = Matrix::Identity(m, m);
  return x;
}

SelfDualCovariance SelfDualCovariance::validate(const Matrix& matrix) {
  const long d = matrix.rows();
  if (d != matrix.cols() || d == 0 || d % 2 != 0)
    throw OddDimension("self-dual covariance needs even dimension");
  if ((matrix - matrix.adjoint()).norm() > kTol)
    throw NotHermitian("self-dual covariance not Hermitian");
  RealVector w = eigs_asc(matrix);
  if (w.minCoeff() < -kTol || w.maxCoeff() > 1.0 + kTol)
    throw SpectrumOutOfRange("self-dual covariance outside [0, 1]");
  const Matrix c = standard_conjugation(static_cast<int>(d) / 2);
  if ((matrix + c * matrix.conjugate() * c - Matrix::Identity(d, d)).norm() >
      kTol)
    throw Error("S + CSC = 1 violated");
  return SelfDualCovariance(hermitian_part(matrix));
}

MajoranaCovariance MajoranaCovariance::validate(const RealMatrix& matrix) {
  const long d = matrix.rows();
  if (d != matrix.cols() || d % 2 != 0)
    throw OddDimension("Majorana covariance needs even dimension");
  if ((matrix + matrix.transpose()).norm() > 1e-12 *
          std::max<double>(1.0, matrix.norm()))
    throw NotAntisymmetric("Majorana covariance not antisymmetric");
  Eigen::JacobiSVD<RealMatrix> svd(matrix);
  if (svd.singularValues().size() > 0 &&
      svd.singularValues()[0] > 1.0 + kTol)
    throw SpectrumOutOfRange("Majorana covariance has singular value > 1");
  RealMatrix a = 0.5 * (matrix - matrix.transpose());
  return MajoranaCovariance(std::move(a));
}

BasisProjection BasisProjection::from_matrix(Matrix p, Matrix conj_op) {
  if ((p - p.adjoint()).norm() > kTol)
    throw NotHermitian("projection not Hermitian");
  if ((p * p - p).norm() > kTol)
    throw NotBasisProjection("matrix is not idempotent to 1e-10");
  if (conj_op.size() > 0) {
    const long d = p.rows();
    if ((conj_op * conj_op.conjugate() - Matrix::Identity(d, d)).norm() > kTol)
      throw Error("conjugation is not an antiunitary involution");
    if ((p + conj_op * p.conjugate() * conj_op.conjugate() -
         Matrix::Identity(d, d))
            .norm() > kTol)
      throw Error("P + CPC = 1 violated for the attached conjugation");
  }
  return BasisProjection(hermitian_part(p), std::move(conj_op));
}

BasisProjection BasisProjection::from_self_dual(const SelfDualCovariance& s) {
  return from_matrix(s.matrix(), standard_conjugation(s.modes()));
}

SelfDualCovariance from_passive(const Covariance& g) {
  const int n = g.dim();
  Matrix s = Matrix::Zero(2 * n, 2 * n);
  s.topLeftCorner(n, n) = g.matrix();
  s.bottomRightCorner(n, n) =
      Matrix::Identity(n, n) - g.matrix().conjugate();
  return SelfDualCovariance::validate(s);
}

MajoranaCovariance to_majorana(const SelfDualCovariance& s) {
  const int m = s.modes();
  const Matrix a_op =
      Complex(0, -1) *
      (2.0 * s.matrix() - Matrix::Identity(2 * m, 2 * m));
  // Basis of the C-real subspace: v_j = e_j + e_j, v_{j+m} = i e_j - i e_j,
  // each of ambient norm sqrt(2); the rescaled inner product makes them
  // orthonormal.
  Matrix v(2 * m, 2 * m);
  v.setZero();
  for (int j = 0; j < m; ++j) {
    v(j, j) = 1.0;
    v(j + m, j) = 1.0;
    v(j, j + m) = Complex(0, 1);
    v(j + m, j + m) = Complex(0, -1);
  }
  Matrix amb = 0.5 * v.adjoint() * a_op * v;
  if (amb.imag().cwiseAbs().maxCoeff() > 1e-10)
    throw NotReal("Majorana matrix has imaginary residue above 1e-10");
  RealMatrix a = amb.real();
  return MajoranaCovariance::validate(0.5 * (a - a.transpose()));
}

SelfDualCovariance self_dual_from_majorana(const MajoranaCovariance& a) {
  const int m = a.modes();
  Matrix v(2 * m, 2 * m);
  v.setZero();
  for (int j = 0; j < m; ++j) {
    v(j, j) = 1.0;
    v(j + m, j) = 1.0;
    v(j, j + m) = Complex(0, 1);
    v(j + m, j + m) = Complex(0, -1);
  }
  const Matrix a_op = 0.5 * v * a.matrix().cast<Complex>() * v.adjoint();
  Matrix s = 0.5 * (Matrix::Identity(2 * m, 2 * m) + Complex(0, 1) * a_op);
  return SelfDualCovariance::validate(hermitian_part(s));
}

BasisProjection purification_projection(const Matrix& s) {
  const long k = s.rows();
  const Matrix id = Matrix::Identity(k, k);
  const Matrix r = contraction_sqrt(s) * contraction_sqrt(id - s);
  Matrix p(2 * k, 2 * k);
  p << s, r, r, id - s;
  return BasisProjection::from_matrix(hermitian_part(p));
}

BasisProjection purification_projection(const Covariance& g) {
  return purification_projection(g.matrix());
}

BasisProjection purification_projection(const SelfDualCovariance& s) {
  const long k = 2 * s.modes();
  const Matrix id = Matrix::Identity(k, k);
  const Matrix r = contraction_sqrt(s.matrix()) * contraction_sqrt(id - s.matrix());
  Matrix p(2 * k, 2 * k);
  p << s.matrix(), r, r, id - s.matrix();
  // The second copy carries -C_A: under C_A + (-C_A) the purification is a
  // genuine basis projection.
  Matrix conj_op = Matrix::Zero(2 * k, 2 * k);
  conj_op.topLeftCorner(k, k) = standard_conjugation(s.modes());
  conj_op.bottomRightCorner(k, k) = -standard_conjugation(s.modes());
  return BasisProjection::from_matrix(hermitian_part(p), std::move(conj_op));
}

Matrix rotation_unitary(const Matrix& s) {
  const long k = s.rows();
  const Matrix id = Matrix::Identity(k, k);
  const Matrix rs = contraction_sqrt(s);
  const Matrix rc = contraction_sqrt(id - s);
  Matrix u(2 * k, 2 * k);
  u << rs, -rc, rc, rs;
  return u;
}

double eta_from_rotation_unitaries(const Matrix& s, const Matrix& t) {
  const Matrix us = rotation_unitary(s);
  const Matrix ut = rotation_unitary(t);
  return (us * us - ut * ut).norm() / (2.0 * std::sqrt(2.0));
}

double araki_transition_matrix(const Matrix& s, const Matrix& t) {
  if (s.rows() != t.rows())
    throw DimensionMismatch("araki_transition: dimension mismatch");
  const Matrix id = Matrix::Identity(s.rows(), s.cols());
  const Matrix m = contraction_sqrt(s) * contraction_sqrt(t) +
                   contraction_sqrt(id - s) * contraction_sqrt(id - t);
  RealVector mu = eigs_asc(m * m.adjoint());
  // det(MM^dag)^{1/2} in log space; MM^dag <= 1 up to roundoff.
  double logdet = 0.0;
  for (int i = 0; i < mu.size(); ++i) {
    const double x = std::min(mu[i], 1.0);
    if (x < 1e-300) return 0.0;
    logdet += std::log(x);
  }
  return std::exp(0.5 * logdet);
}

double araki_transition(const SelfDualCovariance& s,
                        const SelfDualCovariance& t) {
  return araki_transition_matrix(s.matrix(), t.matrix());
}

NormalForm normal_form(const BasisProjection& s, int dim_a) {
  const long d = s.dim();
  if (dim_a <= 0 || dim_a >= d)
    throw IncompatibleSplit("A block must be a strict subspace");
  const long dim_b = d - dim_a;
  if (s.conjugation().size() > 0) {
    // A C-compatible split needs the conjugation block-diagonal.
    if (s.conjugation().topRightCorner(dim_a, dim_b).norm() > kTol ||
        s.conjugation().bottomLeftCorner(dim_b, dim_a).norm() > kTol)
      throw IncompatibleSplit("conjugation mixes the two blocks");
  }

  const Matrix sa = s.matrix().topLeftCorner(dim_a, dim_a);
  const Matrix sb = s.matrix().bottomRightCorner(dim_b, dim_b);
  const Matrix sba = s.matrix().bottomLeftCorner(dim_b, dim_a);

  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian_part(sa));
  constexpr double kPureTol = 1e-12;  // threshold on mu (1 - mu)

  NormalForm nf;
  std::vector<int> pure, faithful;
  for (int i = 0; i < dim_a; ++i) {
    const double mu = es.eigenvalues()[i];
    (mu * (1.0 - mu) > kPureTol ? faithful : pure).push_back(i);
  }
  nf.basis_pure_a.resize(dim_a, pure.size());
  nf.q_a.resize(pure.size());
  for (size_t i = 0; i < pure.size(); ++i) {
    nf.basis_pure_a.col(i) = es.eigenvectors().col(pure[i]);
    nf.q_a[static_cast<int>(i)] = es.eigenvalues()[pure[i]];
  }
  nf.basis_faithful_a.resize(dim_a, faithful.size());
  nf.s_a.resize(faithful.size());
  for (size_t i = 0; i < faithful.size(); ++i) {
    nf.basis_faithful_a.col(i) = es.eigenvectors().col(faithful[i]);
    nf.s_a[static_cast<int>(i)] = es.eigenvalues()[faithful[i]];
  }

  // S_BA = v sqrt(S_A (1 - S_A)); dividing by the (invertible) faithful part
  // is the polar decomposition restricted to r_A.
  const long r = faithful.size();
  nf.v_tilde.resize(dim_b, r);
  for (long i = 0; i < r; ++i) {
    const double mu = nf.s_a[i];
    nf.v_tilde.col(i) = sba * nf.basis_faithful_a.col(i) /
                        std::sqrt(mu * (1.0 - mu));
  }

  const Matrix proj_rb = nf.v_tilde * nf.v_tilde.adjoint();
  nf.q_b = hermitian_part((Matrix::Identity(dim_b, dim_b) - proj_rb) * sb *
                          (Matrix::Identity(dim_b, dim_b) - proj_rb));

  // Reassemble from the decomposition data only.
  Matrix rec = Matrix::Zero(d, d);
  Matrix sa_rec =
      nf.basis_pure_a * nf.q_a.cast<Complex>().asDiagonal() *
          nf.basis_pure_a.adjoint() +
      nf.basis_faithful_a * nf.s_a.cast<Complex>().asDiagonal() *
          nf.basis_faithful_a.adjoint();
  RealVector off(r), comp(r);
  for (long i = 0; i < r; ++i) {
    off[i] = std::sqrt(nf.s_a[i] * (1.0 - nf.s_a[i]));
    comp[i] = 1.0 - nf.s_a[i];
  }
  Matrix sba_rec = nf.v_tilde * off.cast<Complex>().asDiagonal() *
                   nf.basis_faithful_a.adjoint();
  Matrix sb_rec = nf.v_tilde * comp.cast<Complex>().asDiagonal() *
                      nf.v_tilde.adjoint() +
                  nf.q_b;
  rec.topLeftCorner(dim_a, dim_a) = sa_rec;
  rec.bottomLeftCorner(dim_b, dim_a) = sba_rec;
  rec.topRightCorner(dim_a, dim_b) = sba_rec.adjoint();
  rec.bottomRightCorner(dim_b, dim_b) = sb_rec;
  nf.reconstruction_error = (s.matrix() - rec).norm();
  if (nf.reconstruction_error > 1e-9)
    throw Error("normal form reconstruction error above 1e-9");
  return nf;
}

double pfaffian(const RealMatrix& a) { return pfaffian_impl(a); }

Complex pfaffian_complex(const Matrix& a) { return pfaffian_impl(a); }

namespace {
Complex wick_pfaffian(const Matrix& s_sd,
                      const std::vector<FieldOp>& pattern) {
  const size_t p = pattern.size();
  if (p > 8) throw PatternTooLong("pattern longer than 8 operators");
  if (p % 2 != 0) return Complex(0, 0);  // even state
  if (p == 0) return Complex(1, 0);
  const int m = static_cast<int>(s_sd.rows()) / 2;
  // B-field vectors: adag_i -> e_i + 0, a_i -> 0 + e_i.
  Matrix vecs = Matrix::Zero(2 * m, p);
  for (size_t r = 0; r < p; ++r) {
    const int i = pattern[r].mode - 1;
    if (i < 0 || i >= m) throw Error("pattern mode index out of range");
    vecs(pattern[r].dagger ? i : i + m, r) = 1.0;
  }
  // Pairwise contractions omega(B(a) B(b)) = a^T (X S) b.
  const Matrix kernel =
      standard_conjugation(m).transpose() * s_sd;  // X is symmetric
  Matrix q = Matrix::Zero(p, p);
  for (size_t r = 0; r < p; ++r)
    for (size_t c = r + 1; c < p; ++c) {
      q(r, c) = (vecs.col(r).transpose() * kernel * vecs.col(c))(0, 0);
      q(c, r) = -q(r, c);
    }
  return pfaffian_complex(q);
}
}  // namespace

Complex wick_moment(const SelfDualCovariance& s,
                    const std::vector<FieldOp>& pattern) {
  return wick_pfaffian(s.matrix(), pattern);
}

Complex wick_moment(const Covariance& g, const std::vector<FieldOp>& pattern) {
  return wick_pfaffian(from_passive(g).matrix(), pattern);
}

Complex wick_moment_determinant(const Covariance& g,
                                const std::vector<int>& annihilators,
                                const std::vector<int>& creators) {
  if (annihilators.size() != creators.size()) return Complex(0, 0);
  const size_t k = annihilators.size();
  if (k == 0) return Complex(1, 0);
  Matrix sub(k, k);
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < k; ++c)
      sub(r, c) = g.matrix()(annihilators[r] - 1, creators[c] - 1);
  return Eigen::PartialPivLU<Matrix>(sub).determinant();
}

Matrix swap_bogoliubov(int m) { return standard_conjugation(m); }

}  // namespace fermbezzle::selfdual
