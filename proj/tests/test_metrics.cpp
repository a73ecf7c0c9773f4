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
#include <numbers>

#include "errors.hpp"
#include "metrics.hpp"
#include "models.hpp"

namespace dl = diamondlab;
using namespace diamondlab::metrics;
using dl::channel::Channel;
using dl::linalg::ComplexMatrix;
using dl::linalg::HermitianMatrix;
using dl::linalg::Index;

namespace {

// Average fidelity from the Kraus traces alone.
double kraus_trace_fidelity(const Channel& c) {
  const double d = static_cast<double>(c.dim());
  double sum = 0.0;
  double tr_image = 0.0;
  for (const auto& k : c.kraus()) {
    sum += std::norm(k.trace());
    tr_image += (k.adjoint() * k).trace().real();
  }
  return (sum + tr_image) / (d * (d + 1.0));
}

// Generalized Gell-Mann matrices normalized to unit Frobenius norm.
std::vector<ComplexMatrix> traceless_basis(Index d) {
  std::vector<ComplexMatrix> basis;
  const double s = 1.0 / std::sqrt(2.0);
  for (Index j = 0; j < d; ++j)
    for (Index k = j + 1; k < d; ++k) {
      ComplexMatrix sym = ComplexMatrix::Zero(d, d);
      sym(j, k) = s;
      sym(k, j) = s;
      basis.push_back(sym);
      ComplexMatrix anti = ComplexMatrix::Zero(d, d);
      anti(j, k) = {0, -s};
      anti(k, j) = {0, s};
      basis.push_back(anti);
    }
  for (Index l = 1; l < d; ++l) {
    ComplexMatrix diag = ComplexMatrix::Zero(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    for (Index m = 0; m < l; ++m) diag(m, m) = norm;
    diag(l, l) = -static_cast<double>(l) * norm;
    basis.push_back(diag);
  }
  return basis;
}

// Unitarity from Tr(B_i E(B_j)) evaluated through the Kraus action.
double transfer_unitarity(const Channel& c) {
  const Index d = c.dim();
  const auto basis = traceless_basis(d);
  double sum = 0.0;
  for (const auto& bj : basis) {
    ComplexMatrix image = ComplexMatrix::Zero(d, d);
    for (const auto& k : c.kraus()) image += k * bj * k.adjoint();
    for (const auto& bi : basis) sum += std::norm((bi.adjoint() * image).trace());
  }
  return sum / static_cast<double>(d * d - 1);
}

}  // namespace

TEST(AvgFidelity, IdentityIsOne) {
  for (Index d : {2, 3, 4}) {
    EXPECT_NEAR(avg_fidelity(dl::channel::identity(d)), 1.0, 1e-14);
    EXPECT_NEAR(avg_error_rate(dl::channel::identity(d)), 0.0, 1e-14);
  }
}

TEST(AvgFidelity, MatchesKrausTraceFormula) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    for (Index d : {2, 3, 4}) {
      const Channel c = dl::models::random_cptp(d, 3, seed);
      EXPECT_NEAR(avg_fidelity(c), kraus_trace_fidelity(c), 1e-12);
      const Channel t = dl::models::random_trace_nonincreasing(d, 2, seed);
      EXPECT_NEAR(avg_fidelity(t), kraus_trace_fidelity(t), 1e-12);
    }
}

TEST(AvgFidelity, Depolarizing) {
  for (Index d : {2, 3, 4})
    for (double q : {0.0, 0.01, 0.3, 1.0}) {
      const Channel c = dl::models::depolarizing(d, q);
      const double dd = static_cast<double>(d);
      EXPECT_NEAR(avg_error_rate(c), q * (dd - 1) / dd, 1e-12);
      EXPECT_NEAR(unitarity(c), (1 - q) * (1 - q), 1e-12);
    }
}

TEST(AvgFidelity, QubitRotation) {
  for (double delta : {0.0, 0.05, 0.4, 1.3}) {
    const auto m = dl::models::qubit_rotation(delta);
    EXPECT_NEAR(avg_error_rate(m.channel), 2.0 / 3.0 * std::pow(std::sin(delta), 2), 1e-13);
    EXPECT_NEAR(unitarity(m.channel), 1.0, 1e-12);
  }
}

TEST(Unitarity, MatchesTransferMatrixOracle) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed)
    for (Index d : {2, 3, 4}) {
      const Channel c = dl::models::random_cptp(d, 2, seed);
      EXPECT_NEAR(unitarity(c), transfer_unitarity(c), 1e-12);
    }
}

TEST(Unitarity, UnitaryChannelsHaveUnitUnitarity) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    for (Index d : {2, 3, 4})
      EXPECT_NEAR(unitarity(dl::channel::unitary(dl::models::random_unitary(d, seed))), 1.0, 1e-12);
}

TEST(Unitarity, BoundedByOneOnMixedUnitaries) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const double u = unitarity(dl::models::random_mixed_unitary(2, 3, seed));
    EXPECT_LE(u, 1.0 + 1e-12);
    EXPECT_GE(u, 0.0);
  }
}

TEST(Report, CollectsAllMeasures) {
  const Channel c = dl::models::depolarizing(3, 0.2);
  const MetricReport rep = report(c);
  EXPECT_EQ(rep.d, 3);
  EXPECT_NEAR(rep.f_avg + rep.r, 1.0, 1e-15);
  EXPECT_NEAR(rep.u, 0.64, 1e-12);
}

TEST(SubspaceErrorRate, QutritRelaxation) {
  const auto m = dl::models::il(0.1);
  EXPECT_NEAR(avg_error_rate_on_subspace(m.channel, {0, 1}), 0.0504389, 1e-7);
  EXPECT_NEAR(avg_error_rate(m.channel), (1 - std::sqrt(0.9) + 0.025) / 3, 1e-12);
}

TEST(SubspaceErrorRate, FullIndexSetMatchesPlainRate) {
  const Channel c = dl::models::random_cptp(3, 2, 4);
  EXPECT_NEAR(avg_error_rate_on_subspace(c, {0, 1, 2}), avg_error_rate(c), 1e-13);
}

TEST(MonteCarlo, FidelityWithinStatisticalError) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed)
    for (Index d : {2, 3}) {
      const Channel c = dl::models::random_cptp(d, 2, seed);
      const Estimate est = avg_fidelity_haar_mc(c, {20000, seed, 1});
      EXPECT_EQ(est.samples, 20000u);
      EXPECT_GT(est.std_error, 0.0);
      EXPECT_LE(std::abs(est.value - avg_fidelity(c)), 4 * est.std_error);
    }
}

TEST(MonteCarlo, UnitarityWithinStatisticalError) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed)
    for (Index d : {2, 3}) {
      const Channel c = dl::models::random_cptp(d, 2, seed);
      const Estimate est = unitarity_haar_mc(c, {20000, seed, 1});
      EXPECT_LE(std::abs(est.value - unitarity(c)), 4 * est.std_error);
    }
}

TEST(MonteCarlo, UnitaryChannelIsExact) {
  const Channel c = dl::channel::unitary(dl::models::random_unitary(3, 9));
  const Estimate f = avg_fidelity_haar_mc(c, {5000, 2, 1});
  EXPECT_NEAR(f.value, avg_fidelity(c), 5 * f.std_error + 1e-12);
  const Estimate u = unitarity_haar_mc(c, {5000, 2, 1});
  EXPECT_NEAR(u.value, 1.0, 5 * u.std_error + 1e-12);
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResult) {
  const Channel c = dl::models::random_cptp(2, 3, 11);
  const Estimate a = avg_fidelity_haar_mc(c, {30000, 5, 1});
  const Estimate b = avg_fidelity_haar_mc(c, {30000, 5, 4});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.std_error, b.std_error);
  const Estimate ua = unitarity_haar_mc(c, {30000, 5, 1});
  const Estimate ub = unitarity_haar_mc(c, {30000, 5, 3});
  EXPECT_EQ(ua.value, ub.value);
}

TEST(MonteCarlo, SeedsGiveDifferentStreams) {
  const Channel c = dl::models::random_cptp(2, 3, 11);
  EXPECT_NE(avg_fidelity_haar_mc(c, {1000, 1, 1}).value, avg_fidelity_haar_mc(c, {1000, 2, 1}).value);
}

TEST(MonteCarlo, RejectsTooFewSamples) {
  const Channel c = dl::channel::identity(2);
  EXPECT_THROW(avg_fidelity_haar_mc(c, {99, 1, 1}), dl::InvalidArgument);
  EXPECT_THROW(unitarity_haar_mc(c, {10, 1, 1}), dl::InvalidArgument);
}

TEST(ChoiIdentity, ResolvedFormHoldsOnRandomMaps) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    for (Index d : {2, 3, 4}) {
      EXPECT_NEAR(choi_hs_identity_check(dl::models::random_cptp(d, 3, seed)), 0.0, 1e-11);
      EXPECT_NEAR(choi_hs_identity_check(dl::models::random_trace_nonincreasing(d, 2, seed)), 0.0,
                  1e-11);
    }
}

TEST(ChoiIdentity, PrintedFormFailsOnIdentity) {
  const auto sides = choi_hs_identity(dl::channel::identity(2), ChoiIdentityForm::Printed);
  EXPECT_NEAR(sides.lhs, 4.0, 1e-12);
  EXPECT_NEAR(sides.residual, 2.0, 1e-12);
  EXPECT_NEAR(choi_hs_identity(dl::channel::identity(2), ChoiIdentityForm::Resolved).residual, 0.0,
              1e-12);
}
