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

// Named noise models with their closed-form predictions, plus random channel
// generators for property tests.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "channel.hpp"

namespace diamondlab::models {

using channel::Channel;
using linalg::ComplexMatrix;
using linalg::Index;

enum class ModelName { CD, AD, IL, IL2, CL, U, CD2 };
const char* to_string(ModelName name);

struct ClosedForms {
  std::optional<double> r;
  std::optional<double> d_exact;
  std::optional<double> d_upper;
  std::optional<double> d_lower;
  std::optional<double> u;
  /// Set when the formulas are reproduced from a source without derivation and
  /// have to be checked against the generic pipeline before being trusted.
  bool provisional = false;
};

struct ModelSpec {
  ModelName name;
  std::vector<std::pair<std::string, double>> params;
  Channel channel;
  ClosedForms closed_forms;
  /// Basis indices spanning the computational subspace over which error
  /// rates are averaged (leakage models); empty means the full space.
  std::vector<Index> fidelity_subspace;
};

/// Kraus {sqrt(1-p) U, sqrt(p) U Z} with U = exp(-i delta Z); p in [0,1],
/// delta in [-pi/2, pi/2].
ModelSpec cd(double p, double delta);
/// Thermal amplitude damping; p = 1 is zero temperature, p = 1/2 infinite.
ModelSpec ad(double p, double gamma);
/// Qutrit relaxation |1> -> |l> (l = index 2) with probability p.
ModelSpec il(double p);
/// E(rho) = p P rho P + (1 - p) rho, P the projector onto the first `rank`
/// basis states of C^dim; rank in [1, dim - 1].
ModelSpec il2(double p, Index rank, Index dim);
/// U(delta) = exp(-i delta (|1><l| + |l><1|)); delta in [-pi, pi].
ModelSpec cl(double delta);
ModelSpec unitary_model(const ComplexMatrix& u);
/// exp(-i delta Z) on one qubit.
ModelSpec qubit_rotation(double delta);
/// Independent dephasing p on both qubits followed by
/// exp(-i (delta1 Z1 + delta2 Z2 + eps Z1 Z2)).
ModelSpec cd2(double p, double delta1, double delta2, double eps);

/// Builds a model from a name (cd, ad, il, il2, cl, rot, cd2) and keyed
/// parameters; unknown names or keys raise InvalidArgument.
ModelSpec make_model(const std::string& name, const std::map<std::string, double>& params);
std::vector<std::string> model_names();

/// The map whose average fidelity is reported: the compression onto the
/// fidelity subspace when one is set (or `full_space` is false), else the
/// channel itself.
Channel fidelity_map(const ModelSpec& m, bool full_space = false);

// Closed forms as plain functions, shared by tests and sweeps.
double cd_error_rate(double p, double delta);
double cd_diamond(double p, double delta);
double cd_unitarity(double p);
double ad_error_rate(double gamma);
double il_error_rate(double p);
double il_error_rate_full_space(double p);
double il2_error_rate(double p, Index rank, Index dim);
double cl_error_rate(double delta);
double unitary_error_rate(const ComplexMatrix& u);
double cd2_error_rate(double p, double delta, double eps);
double cd2_unitarity(double p);

ComplexMatrix random_unitary(Index d, std::uint64_t seed);
/// Haar-style random isometry C^d -> C^(d*rank) sliced into rank Kraus operators.
Channel random_cptp(Index d, Index kraus_rank, std::uint64_t seed);
/// Convex mixture of k Haar-random unitaries with Dirichlet(1) weights.
Channel random_mixed_unitary(Index d, Index k, std::uint64_t seed);
/// random_cptp followed by a random contraction, so sum K^dag K <= I.
Channel random_trace_nonincreasing(Index d, Index kraus_rank, std::uint64_t seed);
/// E(rho) = (1 - q) rho + q I/d, via Weyl operators.
Channel depolarizing(Index d, double q);

}  // namespace diamondlab::models
