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

#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace diamondlab::bounds {

namespace {

void check_dim(int d) {
  if (d < 2) {
    std::ostringstream os;
    os << "bounds: dimension must be at least 2, got " << d;
    throw InvalidArgument(os.str());
  }
}

double safe_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

}  // namespace

BoundReport observe(BoundReport band, double observed) {
  band.observed = observed;
  band.slack = std::min(observed - band.lower, band.upper - observed);
  band.satisfied = band.slack >= -kBandSlack;
  return band;
}

BoundReport wallman_bounds(double r, int d) {
  check_dim(d);
  const double dd = d;
  BoundReport b;
  b.name = "wallman";
  b.lower = (dd + 1.0) * r / dd;
  b.upper = safe_sqrt(dd * (dd + 1.0) * r);
  b.consistent = r >= -kBandSlack;
  return b;
}

double sandwich_constant(int d) {
  check_dim(d);
  const double dd = d;
  return 0.5 * std::sqrt(1.0 - 1.0 / (dd * dd));
}

BoundReport unitarity_sandwich(double u, double r, int d) {
  const double c = sandwich_constant(d);
  const double dd = d;
  double w = u + 2.0 * dd * r / (dd - 1.0) - 1.0;
  BoundReport b;
  b.name = "unitarity_sandwich";
  if (w < 0.0) {
    b.consistent = w >= -1e-12;
    w = 0.0;
  }
  b.lower = c * std::sqrt(w);
  b.upper = dd * dd * c * std::sqrt(w);
  return b;
}

double unitarity_floor(double r, int d) { return unitarity_floor(r, d, 1.0); }

double unitarity_floor(double r, int d, double t) {
  check_dim(d);
  const double dd = d;
  const double base = (dd * (1.0 - r) - t) / (dd - 1.0);
  return base * base;
}

const char* to_string(Regime r) {
  return r == Regime::Favorable ? "favorable" : "coherent-dominated";
}

ScalingWitness scaling_witness(double u, double r, int d, double kappa) {
  ScalingWitness w;
  w.kappa = kappa;
  w.excess = u - unitarity_floor(r, d);
  w.below_floor = w.excess < -kBandSlack;
  w.regime = w.excess <= kappa * r * r ? Regime::Favorable : Regime::CoherentDominated;
  w.d_band = unitarity_sandwich(u, r, d);
  return w;
}

BoundReport unitary_bounds(double r, int d) {
  check_dim(d);
  const double dd = d;
  BoundReport b;
  b.name = "unitary";
  b.lower = std::sqrt((dd + 1.0) / dd) * safe_sqrt(r);
  b.upper = std::sqrt((dd + 1.0) * dd) * safe_sqrt(r);
  b.consistent = r >= -kBandSlack;
  return b;
}

}  // namespace diamondlab::bounds
