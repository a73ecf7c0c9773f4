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

// Dense complex linear algebra for channels on small systems (d <= 4, so
// Choi matrices are at most 16x16).

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace diamondlab::linalg {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kHermitianTol = 1e-12;

/// A square matrix that is exactly Hermitian as stored.
///
/// Construction from an arbitrary matrix checks
/// ||M - M^dag||_F <= 1e-12 * max(1, ||M||_F) and then stores (M + M^dag)/2.
/// `symmetrized` skips the check, for matrices that are Hermitian up to
/// accumulated rounding (products, solver iterates).
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& m);

  static HermitianMatrix symmetrized(const ComplexMatrix& m);
  static HermitianMatrix zero(Index dim);
  static HermitianMatrix identity(Index dim);
  /// |v><v|
  static HermitianMatrix projector(const ComplexVector& v);

  Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Index r, Index c) const { return m_(r, c); }
  double trace() const { return m_.trace().real(); }

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(double s);

  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }

 private:
  ComplexMatrix m_;
};

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // columns are orthonormal eigenvectors
};

enum class Subsystem { A, B };

bool is_finite(const ComplexMatrix& m);

/// Relative Hermiticity defect ||M - M^dag||_F / max(1, ||M||_F).
double hermiticity_defect(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of an operator on A (x) B, A the leading factor. `keep`
/// names the subsystem that survives.
HermitianMatrix partial_trace(const HermitianMatrix& m, Index dim_a, Index dim_b,
                              Subsystem keep);

/// Cyclic Jacobi eigensolver. Throws NoConvergence if the off-diagonal mass
/// has not dropped below 1e-13 * ||M||_F after 100 sweeps.
EigenDecomposition hermitian_eig(const HermitianMatrix& m);
RealVector eigenvalues(const HermitianMatrix& m);
double min_eigenvalue(const HermitianMatrix& m);
double max_eigenvalue(const HermitianMatrix& m);

double trace_norm(const HermitianMatrix& m);
double operator_norm(const HermitianMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

/// Column stacking: vec(M)[c * rows + r] = M(r, c).
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols);

/// Real Hilbert-Schmidt inner product Re Tr(A^dag B).
double inner(const HermitianMatrix& a, const HermitianMatrix& b);

/// Spectral functions of Hermitian matrices.
HermitianMatrix positive_part(const HermitianMatrix& m, double threshold = 0.0);
/// Projector onto the eigenspace with eigenvalues > threshold.
HermitianMatrix positive_projector(const HermitianMatrix& m, double threshold);
HermitianMatrix psd_sqrt(const HermitianMatrix& m);
/// Clips the spectrum into [lo, hi].
HermitianMatrix clip_spectrum(const HermitianMatrix& m, double lo, double hi);

}  // namespace diamondlab::linalg
