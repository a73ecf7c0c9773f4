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

// Inequalities relating the average error rate r, the unitarity u and the
// diamond distance D of a noise channel on a d-dimensional system.

#include <optional>
#include <string>

namespace diamondlab::bounds {

inline constexpr double kBandSlack = 1e-9;
inline constexpr double kDefaultKappa = 10.0;

struct BoundReport {
  std::string name;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<double> observed;
  /// lower - 1e-9 <= observed <= upper + 1e-9; true when nothing is observed.
  bool satisfied = true;
  /// min(observed - lower, upper - observed); negative when violated.
  double slack = 0.0;
  /// False when the inputs lie outside the domain where the band is defined
  /// (for instance u below the unitarity floor).
  bool consistent = true;
};

/// Attaches an observation and evaluates satisfied/slack.
BoundReport observe(BoundReport band, double observed);

/// (d+1) r / d <= D <= sqrt(d (d+1) r).
BoundReport wallman_bounds(double r, int d);

/// c_d = (1/2) sqrt(1 - 1/d^2).
double sandwich_constant(int d);

/// c_d sqrt(w) <= D <= d^2 c_d sqrt(w) with w = u + 2 d r/(d-1) - 1; w within
/// 1e-12 below zero is clamped to zero, anything lower marks the report
/// inconsistent. Valid for unital trace-preserving channels.
BoundReport unitarity_sandwich(double u, double r, int d);

/// (1 - d r/(d-1))^2.
double unitarity_floor(double r, int d);
/// Floor for a trace non-increasing map with t = Tr E(I) / d:
/// ((d (1 - r) - t) / (d - 1))^2. Equals the form above at t = 1.
double unitarity_floor(double r, int d, double t);

enum class Regime { Favorable, CoherentDominated };
const char* to_string(Regime r);

struct ScalingWitness {
  double excess = 0.0;  // u - floor
  double kappa = kDefaultKappa;
  Regime regime = Regime::Favorable;
  BoundReport d_band;
  /// u lies more than 1e-9 below the floor, which no valid channel allows.
  bool below_floor = false;
};

/// Favorable iff excess <= kappa r^2.
ScalingWitness scaling_witness(double u, double r, int d, double kappa = kDefaultKappa);

/// sqrt((d+1)/d) sqrt(r) <= D <= sqrt((d+1) d) sqrt(r) for unitary channels.
BoundReport unitary_bounds(double r, int d);

}  // namespace diamondlab::bounds
