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

#ifndef FERMBEZZLE_SELFDUAL_HPP
#define FERMBEZZLE_SELFDUAL_HPP

#include <vector>

#include "fermbezzle/covariance.hpp"

namespace fermbezzle::selfdual {

// The doubled-space formalism for general Gaussian states. The antiunitary
// conjugation C acts as xi |-> Mc * conj(xi); the standard choice is Mc =
// block swap of the two m-blocks, i.e. complex conjugation composed with the
// swap. Objects that live on twisted copies (purifications) carry their Mc
// explicitly.

/// Block-swap matrix [[0, 1],[1, 0]] on C^{2m}: the standard conjugation.
Matrix standard_conjugation(int m);

/// Self-dual covariance: 0 <= S <= 1 on C^{2m} with S + C S C = 1 for the
/// standard conjugation.
class SelfDualCovariance {
 public:
  static SelfDualCovariance validate(const Matrix& matrix);

  int modes() const { return static_cast<int>(matrix_.rows()) / 2; }
  const Matrix& matrix() const { return matrix_; }

 private:
  explicit SelfDualCovariance(Matrix m) : matrix_(std::move(m)) {}
  Matrix matrix_;
};

/// Real antisymmetric Majorana covariance A = -i(2S - 1) in the basis
/// v_j = phi_j + phi_j, v_{j+m} = i phi_j - i phi_j.
class MajoranaCovariance {
 public:
  static MajoranaCovariance validate(const RealMatrix& matrix);

  int modes() const { return static_cast<int>(matrix_.rows()) / 2; }
  const RealMatrix& matrix() const { return matrix_; }

 private:
  explicit MajoranaCovariance(RealMatrix m) : matrix_(std::move(m)) {}
  RealMatrix matrix_;
};

/// Projection (S^2 = S) on a doubled space; pure Gaussian states. The
/// conjugation matrix is carried along when one is defined (empty for bare
/// purification projections of passive covariances).
class BasisProjection {
 public:
  static BasisProjection from_matrix(Matrix p, Matrix conj_op = Matrix());
  static BasisProjection from_self_dual(const SelfDualCovariance& s);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  /// Empty when no conjugation structure is attached.
  const Matrix& conjugation() const { return conj_op_; }

 private:
  BasisProjection(Matrix m, Matrix c)
      : matrix_(std::move(m)), conj_op_(std::move(c)) {}
  Matrix matrix_;
  Matrix conj_op_;
};

/// S = G + (1 - conj(G)) block-diagonally: the self-dual covariance of the
/// passive state with covariance G.
SelfDualCovariance from_passive(const Covariance& g);

MajoranaCovariance to_majorana(const SelfDualCovariance& s);

/// Inverse of to_majorana: S = (1 + i A)/2 lifted back to the doubled space.
SelfDualCovariance self_dual_from_majorana(const MajoranaCovariance& a);

/// P_S = [[S, R],[R, 1-S]] with R = sqrt(S) sqrt(1-S), on the doubled input
/// space. For a self-dual input the output carries the twisted conjugation
/// C_A + (-C_A) under which it is a basis projection.
BasisProjection purification_projection(const Matrix& s);
BasisProjection purification_projection(const Covariance& g);
BasisProjection purification_projection(const SelfDualCovariance& s);

/// U_S = [[sqrt(S), -sqrt(1-S)],[sqrt(1-S), sqrt(S)]]; rotates 1 x |0><0|
/// onto P_S.
Matrix rotation_unitary(const Matrix& s);

/// eta recovered from the rotation unitaries: ||U_S^2 - U_T^2||_HS / (2 sqrt 2).
double eta_from_rotation_unitaries(const Matrix& s, const Matrix& t);

/// Araki transition probability det(M M^dag)^{1/2} with
/// M = sqrt(S) sqrt(T) + sqrt(1-S) sqrt(1-T); self-dual inputs.
double araki_transition(const SelfDualCovariance& s,
                        const SelfDualCovariance& t);
double araki_transition_matrix(const Matrix& s, const Matrix& t);

struct NormalForm {
  Matrix basis_pure_a;      // A-block columns spanning ker S_A(1-S_A)
  RealVector q_a;           // S_A eigenvalues there (0 or 1)
  Matrix basis_faithful_a;  // A-block columns spanning supp S_A(1-S_A)
  RealVector s_a;           // faithful eigenvalues, 0 < s < 1
  Matrix v_tilde;           // isometry r_A -> B block, columns span r_B
  Matrix q_b;               // B-block matrix supported on the complement
  double reconstruction_error = 0.0;
};

/// Decomposition of a bipartite basis projection into pure blocks and a
/// faithful block S_B = v (1 - S_A) v^dag; dim_a is the size of the A block.
NormalForm normal_form(const BasisProjection& s, int dim_a);

/// Pfaffian of a real antisymmetric matrix via tridiagonalization with
/// partial pivoting.
double pfaffian(const RealMatrix& a);
Complex pfaffian_complex(const Matrix& a);

struct FieldOp {
  int mode = 1;  // 1-based
  bool dagger = false;
};

/// Quasi-free moment of an arbitrary creation/annihilation pattern, by the
/// Pfaffian of pairwise contractions. Pattern length <= 8.
Complex wick_moment(const SelfDualCovariance& s,
                    const std::vector<FieldOp>& pattern);
Complex wick_moment(const Covariance& g, const std::vector<FieldOp>& pattern);

/// det route for the canonical pattern a_{i_k}..a_{i_1} adag_{j_1}..adag_{j_l}
/// on a passive state: delta_{k,l} det G_{IJ}.
Complex wick_moment_determinant(const Covariance& g,
                                const std::vector<int>& annihilators,
                                const std::vector<int>& creators);

/// Doubled-space block swap xi_1 + xi_2 |-> xi_2 + xi_1; satisfies CuC = u
/// and maps the passive state G to the passive state 1 - conj(G).
Matrix swap_bogoliubov(int m);

}  // namespace fermbezzle::selfdual

#endif
