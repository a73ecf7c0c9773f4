// Copyright 2026 The diamondlab Authors
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

#pragma once

// Completely positive maps in Kraus, Liouville and Choi form.
//
// Conventions used throughout the library:
//   * vec is column stacking, so L(E) = sum_i conj(K_i) (x) K_i acts as
//     L vec(rho) = vec(E(rho)).
//   * J(E) = sum_i vec(K_i) vec(K_i)^dag = d (id_A (x) E_B)(|Bell><Bell|),
//     reference system A first. Note the factor d: Tr J(E) = Tr E(I).

#include <vector>

#include "linalg.hpp"

namespace diamondlab::channel {

using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;
using linalg::HermitianMatrix;
using linalg::Index;

inline constexpr double kChannelTol = 1e-10;

class Channel {
 public:
  /// Validates complete positivity and trace non-increase
  /// (sum K^dag K <= I + 1e-10) and populates the Liouville/Choi caches.
  /// Throws InvalidChannel or DimensionMismatch.
  static Channel from_kraus(std::vector<ComplexMatrix> kraus);

  Index dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const ComplexMatrix& liouville() const { return liouville_; }
  const HermitianMatrix& choi() const { return choi_; }
  bool trace_preserving() const { return trace_preserving_; }
  bool unital() const { return unital_; }
  /// Tr E(I); equals d for trace-preserving maps.
  double identity_image_trace() const { return identity_image_trace_; }

  HermitianMatrix apply(const HermitianMatrix& rho) const;

 private:
  Channel() = default;

  Index dim_ = 0;
  std::vector<ComplexMatrix> kraus_;
  ComplexMatrix liouville_;
  HermitianMatrix choi_;
  bool trace_preserving_ = false;
  bool unital_ = false;
  double identity_image_trace_ = 0.0;
};

/// Liouville matrix in the orthonormal Hermitian basis {I/sqrt(d), B_1, ...},
/// split as [[t, e_sdl], [e_nu, E_u]].
struct BlockDecomposition {
  double t = 0.0;  // Tr E(I) / d
  ComplexVector e_sdl;
  ComplexVector e_nu;
  ComplexMatrix e_u;
};

struct BellState {
  Index dim = 0;
  ComplexVector vector;  // (1/sqrt d) sum_k |k>|k>
};

BellState bell_state(Index dim);

Channel identity(Index dim);
Channel unitary(const ComplexMatrix& u);

ComplexMatrix kraus_to_liouville(const Channel& c);
HermitianMatrix kraus_to_choi(const Channel& c);

/// Kraus operators sqrt(lambda) unvec(v) from the eigenvectors of J with
/// lambda > 1e-12. Throws InvalidChannel if an eigenvalue is below -1e-8.
std::vector<ComplexMatrix> choi_to_kraus(const HermitianMatrix& j);

/// Index reshuffle between Liouville and Choi forms. It is an involution, so
/// the same permutation converts in both directions.
ComplexMatrix reshuffle(const ComplexMatrix& m);
HermitianMatrix liouville_to_choi(const ComplexMatrix& l);
ComplexMatrix choi_to_liouville(const HermitianMatrix& j);

HermitianMatrix apply(const Channel& c, const HermitianMatrix& rho);
/// a after b: (a o b)(rho) = a(b(rho)), Kraus set {A_i B_j}.
Channel compose(const Channel& a, const Channel& b);
Channel tensor(const Channel& a, const Channel& b);
/// J(a) - J(b).
HermitianMatrix difference_choi(const Channel& a, const Channel& b);

/// Orthonormal Hermitian operator basis with B_0 = I/sqrt(d):
///   d=2: (I, X, Y, Z)/sqrt2
///   d=3: I/sqrt3 followed by the Gell-Mann matrices lambda_1..lambda_8 / sqrt2
///   d=4: two-qubit Paulis in lexicographic order (II, IX, IY, IZ, XI, ...)/2
/// Throws InvalidArgument for other dimensions.
const std::vector<ComplexMatrix>& operator_basis(Index dim);

BlockDecomposition block_decompose(const Channel& c);
/// Inverse of block_decompose: the Liouville matrix in the vec basis.
ComplexMatrix reassemble(const BlockDecomposition& blocks, Index dim);

/// Kraus {P K_i P} for an orthogonal projector P (same dimension as c).
Channel project_to_subspace(const Channel& c, const HermitianMatrix& proj);
/// Restriction V^dag K_i V onto the range of an isometry V (d x k).
Channel compress_to_subspace(const Channel& c, const ComplexMatrix& isometry);
/// Isometry onto span{|i> : i in indices}.
ComplexMatrix coordinate_isometry(Index dim, const std::vector<Index>& indices);

}  // namespace diamondlab::channel
