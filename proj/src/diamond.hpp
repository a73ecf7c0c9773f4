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

// Diamond distance D = (1/2)||Delta||_diamond through the semidefinite
// program pair
//
//   max <J, W>  s.t.  0 <= W <= rho (x) I,  rho a density operator
//   min ||Tr_B Z||_inf  s.t.  Z >= J,  Z >= 0
//
// where J is the Choi matrix of Delta (reference system A first). Any
// feasible point of either program is a certificate: a primal point bounds D
// from below, a dual point from above.

#include <string>
#include <utility>
#include <vector>

#include "channel.hpp"

namespace diamondlab::diamond {

using channel::Channel;
using linalg::ComplexMatrix;
using linalg::HermitianMatrix;
using linalg::Index;

inline constexpr double kDefaultTolerance = 1e-7;
inline constexpr double kCertificateTolerance = 1e-8;

struct Dims {
  Index a = 0;
  Index b = 0;
};

enum class Status { Optimal, MaxIter, InfeasibleInput };
const char* to_string(Status s);

enum class CertificateKind { Primal, Dual };
const char* to_string(CertificateKind k);

struct Residual {
  std::string name;
  double value = 0.0;
};

/// A feasible point of one of the two programs together with the operator
/// it certifies. Primal certificates carry rho and W, dual certificates Z.
struct Certificate {
  CertificateKind kind = CertificateKind::Dual;
  Dims dims;
  HermitianMatrix j_delta;
  double objective = 0.0;
  HermitianMatrix rho;
  HermitianMatrix w;
  HermitianMatrix z;
  std::vector<Residual> residuals;

  double max_residual() const;
  bool feasible(double tol = kCertificateTolerance) const { return max_residual() <= tol; }
};

/// Objective <J, W> and residuals |Tr rho - 1|, rho >= 0, W >= 0, W <= rho (x) I.
Certificate primal_certificate(const HermitianMatrix& j_delta, Dims dims,
                               const HermitianMatrix& rho, const HermitianMatrix& w);
/// Objective ||Tr_B Z||_inf and residuals Z >= 0, Z >= J.
Certificate dual_certificate(const HermitianMatrix& j_delta, Dims dims, const HermitianMatrix& z);

struct DiamondResult {
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;
  HermitianMatrix rho;
  HermitianMatrix w;
  HermitianMatrix z;
  int iterations = 0;
  Status status = Status::Optimal;
  std::vector<std::string> warnings;
  Certificate primal;
  Certificate dual;

  /// Midpoint of the certified bracket [primal_value, dual_value].
  double value() const { return 0.5 * (primal_value + dual_value); }
};

/// Status Optimal means gap <= tol and every certificate residual <= 1e-8.
/// MaxIter still returns valid (if looser) certified bounds.
DiamondResult solve_diamond(const HermitianMatrix& j_delta, Dims dims,
                            double tol = kDefaultTolerance);
/// Variant for unchecked input: a non-Hermitian matrix yields InfeasibleInput.
DiamondResult solve_diamond(const ComplexMatrix& j_delta, Dims dims,
                            double tol = kDefaultTolerance);

/// D(e, reference) with J = J(reference) - J(e).
DiamondResult diamond_distance(const Channel& e, const Channel& reference,
                               double tol = kDefaultTolerance);
/// D(e, identity).
DiamondResult diamond_distance(const Channel& e, double tol = kDefaultTolerance);

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

struct MgeBounds {
  double lower = 0.0;
  double upper = 0.0;
  Certificate primal;
  Certificate dual;
};

/// rho = I/d, W = P/d and Z = P J P with P the projector onto the strictly
/// positive eigenspace of J (eigenvalues > 1e-12).
MgeBounds mge_bounds(const HermitianMatrix& j_delta, Dims dims);

/// ||J||_1 / (2 d_A) <= D <= ||J||_1 / 2.
Bracket choi_norm_bounds(const HermitianMatrix& j_delta, Dims dims);

/// Dual point 2x|Bell><Bell| + y0|00><00| + y1|11><11| for the thermal
/// amplitude-damping difference J(I) - J(E_AD).
Certificate ad_dual_certificate(double p, double gamma);

/// Dual point for the qutrit relaxation |1> -> |l>. The point certifies the
/// operator J(E_IL) - J(I), which has the same diamond norm as J(I) - J(E_IL).
Certificate il_dual_certificate(double p);

struct ExactValue {
  double value = 0.0;
  Certificate primal;
  Certificate dual;
};

/// E(rho) = p P rho P + (1 - p) rho with P the projector onto the first `rank`
/// basis states: primal rho = |d-1><d-1|, W = |d-1,d-1><d-1,d-1| and dual
/// Z = p d |Bell><Bell| both attain p.
ExactValue il2_exact(double p, Index rank, Index dim);

/// max over unit x of sqrt(1 - |<x|U|x>|^2), via the distance from 0 to the
/// convex hull of the eigenvalues of U.
double unitary_diamond(const ComplexMatrix& u);

}  // namespace diamondlab::diamond
