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

#include <gtest/gtest.h>

#include <cmath>

#include "bounds.hpp"
#include "diamond.hpp"
#include "metrics.hpp"
#include "models.hpp"

namespace dl = diamondlab;
using namespace diamondlab::bounds;

TEST(Wallman, Edges) {
  const BoundReport zero = wallman_bounds(0.0, 2);
  EXPECT_EQ(zero.lower, 0.0);
  EXPECT_EQ(zero.upper, 0.0);
  const BoundReport b = wallman_bounds(1e-4, 2);
  EXPECT_NEAR(b.lower, 1.5e-4, 1e-18);
  EXPECT_NEAR(b.upper, std::sqrt(6e-4), 1e-15);
  EXPECT_NEAR(b.upper, 0.024495, 1e-6);
}

TEST(Wallman, HoldsForRotations) {
  for (double delta : {0.001, 0.01, 0.1, 0.5}) {
    const auto m = dl::models::cd(0.0, delta);
    const double r = dl::metrics::avg_error_rate(m.channel);
    const double d = dl::diamond::diamond_distance(m.channel).value();
    EXPECT_TRUE(observe(wallman_bounds(r, 2), d).satisfied);
  }
}

TEST(Observe, SatisfiedAndSlack) {
  BoundReport band{"test", 1.0, 2.0};
  const BoundReport in = observe(band, 1.5);
  EXPECT_TRUE(in.satisfied);
  EXPECT_NEAR(in.slack, 0.5, 1e-15);
  const BoundReport out = observe(band, 2.5);
  EXPECT_FALSE(out.satisfied);
  EXPECT_NEAR(out.slack, -0.5, 1e-15);
  EXPECT_TRUE(observe(band, 2.0 + 5e-10).satisfied);
  EXPECT_FALSE(observe(band, 1.0 - 2e-9).satisfied);
}

TEST(Sandwich, ConstantAndIdentity) {
  EXPECT_NEAR(sandwich_constant(2), std::sqrt(3.0) / 4.0, 1e-15);
  EXPECT_NEAR(sandwich_constant(2), 0.43301, 1e-5);
  const BoundReport b = unitarity_sandwich(1.0, 0.0, 2);
  EXPECT_EQ(b.lower, 0.0);
  EXPECT_EQ(b.upper, 0.0);
  EXPECT_TRUE(b.consistent);
}

TEST(Sandwich, ClampsRoundoffAndFlagsInconsistency) {
  EXPECT_TRUE(unitarity_sandwich(1.0 - 1e-13, 0.0, 2).consistent);
  EXPECT_EQ(unitarity_sandwich(1.0 - 1e-13, 0.0, 2).lower, 0.0);
  EXPECT_FALSE(unitarity_sandwich(0.5, 0.0, 2).consistent);
}

TEST(Sandwich, ContainsMixedUnitaryDiamond) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto c = dl::models::random_mixed_unitary(2, 3, seed);
    const double u = dl::metrics::unitarity(c);
    const double r = dl::metrics::avg_error_rate(c);
    const double d = dl::diamond::diamond_distance(c).value();
    EXPECT_TRUE(observe(unitarity_sandwich(u, r, 2), d).satisfied) << seed;
    EXPECT_TRUE(observe(wallman_bounds(r, 2), d).satisfied) << seed;
  }
}

TEST(Floor, Values) {
  EXPECT_EQ(unitarity_floor(0.0, 2), 1.0);
  EXPECT_NEAR(unitarity_floor(0.1, 2), 0.64, 1e-15);
}

TEST(Floor, BelowMeasuredUnitarity) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    for (int d : {2, 3}) {
      const auto c = dl::models::random_trace_nonincreasing(d, 2, seed);
      const double scale = c.identity_image_trace() / d;
      EXPECT_LE(unitarity_floor(dl::metrics::avg_error_rate(c), d, scale), dl::metrics::unitarity(c) + 1e-12);
      const auto t = dl::models::random_cptp(d, 3, seed);
      EXPECT_LE(unitarity_floor(dl::metrics::avg_error_rate(t), d), dl::metrics::unitarity(t) + 1e-12);
    }
}

TEST(Floor, TracePreservingFormFailsUnderHeavyLoss) {
  const auto c = dl::models::random_trace_nonincreasing(2, 2, 3);
  EXPECT_GT(unitarity_floor(dl::metrics::avg_error_rate(c), 2), dl::metrics::unitarity(c));
  EXPECT_EQ(unitarity_floor(0.1, 3), unitarity_floor(0.1, 3, 1.0));
}

TEST(Witness, DephasingIsFavorable) {
  for (double p : {1e-4, 1e-3, 1e-2}) {
    const double r = 2.0 / 3.0 * p;
    const double u = dl::models::cd_unitarity(p);
    const ScalingWitness w = scaling_witness(u, r, 2);
    EXPECT_EQ(w.regime, Regime::Favorable);
    EXPECT_LE(w.excess, w.kappa * r * r);
    EXPECT_LE(w.d_band.upper, 10 * r);
  }
}

TEST(Witness, RotationIsCoherentDominated) {
  for (double delta : {1e-3, 1e-2, 0.1}) {
    const double r = 2.0 / 3.0 * std::pow(std::sin(delta), 2);
    const ScalingWitness w = scaling_witness(1.0, r, 2);
    EXPECT_EQ(w.regime, Regime::CoherentDominated);
    EXPECT_NEAR(w.excess / r, 4.0, 4 * r + 1e-9);
    EXPECT_STREQ(to_string(w.regime), "coherent-dominated");
  }
}

TEST(Witness, FloorViolationFlagged) {
  const ScalingWitness w = scaling_witness(0.5, 0.01, 2);
  EXPECT_TRUE(w.below_floor);
  EXPECT_FALSE(scaling_witness(0.999, 0.001, 2).below_floor);
}

TEST(Witness, RatioGrowsAsRotationOvertakesDephasing) {
  for (double p : {1e-2, 1e-3, 1e-4}) {
    auto ratio = [&](double delta) { return dl::models::cd_diamond(p, delta) / dl::models::cd_error_rate(p, delta); };
    EXPECT_GT(ratio(2 * p), ratio(p / 2));
  }
}

TEST(UnitaryBounds, QubitLowerEdgeIsExact) {
  EXPECT_EQ(unitary_bounds(0.0, 2).lower, 0.0);
  for (double delta : {0.01, 0.2, 1.0}) {
    const double r = 2.0 / 3.0 * std::pow(std::sin(delta), 2);
    EXPECT_NEAR(unitary_bounds(r, 2).lower, std::abs(std::sin(delta)), 1e-12);
  }
}

TEST(UnitaryBounds, ContainQutritUnitaries) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto u = dl::models::random_unitary(3, seed);
    const double d = dl::diamond::unitary_diamond(u);
    EXPECT_TRUE(observe(unitary_bounds(dl::models::unitary_error_rate(u), 3), d).satisfied) << seed;
  }
}

TEST(Monotonicity, EdgesNondecreasingInR) {
  for (int d : {2, 3}) {
    double prev_wl = -1, prev_wu = -1, prev_sl = -1, prev_su = -1, prev_ul = -1, prev_uu = -1;
    for (double r = 0.0; r <= 0.3; r += 0.01) {
      const BoundReport w = wallman_bounds(r, d);
      const BoundReport s = unitarity_sandwich(0.9, r, d);
      const BoundReport u = unitary_bounds(r, d);
      EXPECT_GE(w.lower, prev_wl);
      EXPECT_GE(w.upper, prev_wu);
      EXPECT_GE(s.lower, prev_sl);
      EXPECT_GE(s.upper, prev_su);
      EXPECT_GE(u.lower, prev_ul);
      EXPECT_GE(u.upper, prev_uu);
      prev_wl = w.lower, prev_wu = w.upper, prev_sl = s.lower, prev_su = s.upper;
      prev_ul = u.lower, prev_uu = u.upper;
    }
  }
}
