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

// Average fidelity, average error rate and unitarity of a CP map, together
// with Haar Monte-Carlo estimators of the same integrals.

#include <cstdint>
#include <vector>

#include "channel.hpp"

namespace diamondlab::metrics {

using channel::Channel;
using linalg::Index;

struct MetricReport {
  double r = 0.0;
  double f_avg = 1.0;
  double u = 1.0;
  Index d = 0;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// F = (Tr L(E) + Tr E(I)) / (d (d + 1)); valid for trace non-increasing maps.
double avg_fidelity(const Channel& c);
double avg_error_rate(const Channel& c);
/// ||E_u||_F^2 / (d^2 - 1) from the block decomposition.
double unitarity(const Channel& c);
MetricReport report(const Channel& c);

/// Error rate of the compression of c onto span{|i> : i in indices}.
double avg_error_rate_on_subspace(const Channel& c, const std::vector<Index>& indices);

struct MonteCarloOptions {
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Haar average of <psi|E(psi)|psi>. Deterministic in (samples, seed);
/// independent of the thread count. Requires samples >= 100.
Estimate avg_fidelity_haar_mc(const Channel& c, const MonteCarloOptions& opts);
/// (d/(d-1)) times the Haar average of Tr E'(psi)^2 with E'(X) = E(X) - Tr E(X) I/d
/// on the traceless part X = psi - I/d.
Estimate unitarity_haar_mc(const Channel& c, const MonteCarloOptions& opts);

/// Coefficient of u in the Frobenius-norm identity for J(E).
enum class ChoiIdentityForm {
  Resolved,  // ||J||^2 = (d^2-1) u + ||e_nu||^2 + ||e_sdl||^2 + t^2
  Printed,   // ||J||^2 = (d^2+1) u + ||e_nu||^2 + ||e_sdl||^2 + t
};

struct ChoiIdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

ChoiIdentitySides choi_hs_identity(const Channel& c, ChoiIdentityForm form);
/// |LHS - RHS| of the resolved identity.
double choi_hs_identity_check(const Channel& c,
                              ChoiIdentityForm form = ChoiIdentityForm::Resolved);

}  // namespace diamondlab::metrics
