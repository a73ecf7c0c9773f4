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

// Primal-dual interior-point solver for the diamond-norm semidefinite
// program of a Hermitian operator J on A (x) B:
//
//   primal:  max <J, W>       s.t.  W <= rho (x) I_B,  Tr rho = 1,  W, rho >= 0
//   dual:    min ||Tr_B Z||   s.t.  Z >= J,  Z >= 0
//
// The dual is cast in standard form with variables y = (coordinates of Z in
// an orthonormal Hermitian basis, t) and three slack blocks Z, Z - J and
// t I - Tr_B Z. Search directions are HKM with a Mehrotra predictor-corrector.
// Every iterate is projected onto an exactly feasible primal and dual point,
// so the returned bounds are certified regardless of how the iteration ends.

#include <string>

#include "linalg.hpp"

namespace diamondlab::sdp {

using linalg::ComplexMatrix;
using linalg::HermitianMatrix;
using linalg::Index;

struct PrimalPoint {
  HermitianMatrix rho;
  HermitianMatrix w;
  double objective = 0.0;
};

struct DualPoint {
  HermitianMatrix z;
  double objective = 0.0;
};

struct SolverOptions {
  double gap_target = 1e-10;
  int max_iterations = 200;
};

enum class StopReason { Converged, IterationCap, Stalled };

struct SolverOutcome {
  PrimalPoint primal;
  DualPoint dual;
  int iterations = 0;
  StopReason reason = StopReason::Converged;
};

/// Feasible primal point nearest in spirit to (rho, w): rho is clipped to the
/// PSD cone and normalized, then w is rescaled into [0, rho (x) I_B] via
/// w' = R clip(R^+ w R^+, 0, 1) R with R = sqrt(rho) (x) I_B.
PrimalPoint repair_primal(const ComplexMatrix& rho, const ComplexMatrix& w,
                          const HermitianMatrix& j, Index dim_a, Index dim_b);

/// Feasible dual point: z + c I with the smallest c >= 0 such that the result
/// dominates both 0 and J.
DualPoint repair_dual(const ComplexMatrix& z, const HermitianMatrix& j, Index dim_a,
                      Index dim_b);

SolverOutcome solve_watrous(const HermitianMatrix& j, Index dim_a, Index dim_b,
                            const SolverOptions& opts);

}  // namespace diamondlab::sdp
