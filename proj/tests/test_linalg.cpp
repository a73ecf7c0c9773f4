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

#include <Eigen/Eigenvalues>
#include <cmath>

#include "errors.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace dl = diamondlab;
using namespace diamondlab::linalg;

namespace {

HermitianMatrix random_hermitian(Index n, std::uint64_t seed) {
  dl::rng::CounterRng g(seed);
  const ComplexMatrix a = g.complex_gaussian(n, n);
  return HermitianMatrix::symmetrized(a + a.adjoint());
}

ComplexMatrix sigma_z() {
  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

ComplexMatrix sigma_x() {
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

}  // namespace

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_LT((kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)) -
             ComplexMatrix::Identity(4, 4)).norm(), 1e-15);
}

TEST(Kron, ZTensorZ) {
  const ComplexMatrix zz = kron(sigma_z(), sigma_z());
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1, -1, -1, 1;
  EXPECT_LT((zz - expected).norm(), 1e-15);
}

TEST(Kron, MatchesLoopDefinition) {
  dl::rng::CounterRng g(11);
  const ComplexMatrix a = g.complex_gaussian(2, 3);
  const ComplexMatrix b = g.complex_gaussian(2, 2);
  const ComplexMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 4);
  ASSERT_EQ(k.cols(), 6);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 3; ++j)
      for (Index p = 0; p < 2; ++p)
        for (Index q = 0; q < 2; ++q)
          EXPECT_LT(std::abs(k(i * 2 + p, j * 2 + q) - a(i, j) * b(p, q)), 1e-15);
}

TEST(HermitianMatrix, RejectsNonHermitian) {
  ComplexMatrix m(2, 2);
  m << 1, 2, 0, 1;
  EXPECT_THROW(HermitianMatrix{m}, dl::InvalidArgument);
}

TEST(PartialTrace, BellStateReducesToMaximallyMixed) {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const HermitianMatrix rho = HermitianMatrix::projector(bell);
  const HermitianMatrix reduced = partial_trace(rho, 2, 2, Subsystem::A);
  EXPECT_LT((reduced.matrix() - ComplexMatrix::Identity(2, 2) / 2.0).norm(), 1e-15);
}

TEST(PartialTrace, ProductStateFactorizes) {
  dl::rng::CounterRng g(3);
  const ComplexMatrix a = g.complex_gaussian(3, 3);
  const ComplexMatrix b = g.complex_gaussian(2, 2);
  const ComplexMatrix rho_a = a * a.adjoint();
  const ComplexMatrix rho_b = b * b.adjoint();
  const HermitianMatrix prod = HermitianMatrix::symmetrized(kron(rho_a, rho_b));
  const HermitianMatrix kept_a = partial_trace(prod, 3, 2, Subsystem::A);
  EXPECT_LT((kept_a.matrix() - rho_a * rho_b.trace()).norm(), 1e-12);
  const HermitianMatrix kept_b = partial_trace(prod, 3, 2, Subsystem::B);
  EXPECT_LT((kept_b.matrix() - rho_b * rho_a.trace()).norm(), 1e-12);
}

TEST(PartialTrace, MatchesIndexSum) {
  const HermitianMatrix m = random_hermitian(9, 5);
  const HermitianMatrix kept = partial_trace(m, 3, 3, Subsystem::A);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      Complex s = 0;
      for (Index k = 0; k < 3; ++k) s += m(i * 3 + k, j * 3 + k);
      EXPECT_LT(std::abs(kept(i, j) - s), 1e-12);
    }
  EXPECT_NEAR(kept.trace(), m.trace(), 1e-12);
}

TEST(PartialTrace, Linear) {
  const HermitianMatrix x = random_hermitian(6, 8);
  const HermitianMatrix y = random_hermitian(6, 9);
  const HermitianMatrix lhs = partial_trace(0.7 * x + (-1.3) * y, 2, 3, Subsystem::A);
  const HermitianMatrix rhs =
      0.7 * partial_trace(x, 2, 3, Subsystem::A) + (-1.3) * partial_trace(y, 2, 3, Subsystem::A);
  EXPECT_LT((lhs - rhs).matrix().norm(), 1e-12);
}

TEST(PartialTrace, DimensionMismatch) {
  EXPECT_THROW(partial_trace(HermitianMatrix::identity(5), 2, 2, Subsystem::A),
               dl::DimensionMismatch);
}

TEST(HermitianEig, DiagonalInput) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m.diagonal() << 3, 1, 2;
  const EigenDecomposition e = hermitian_eig(HermitianMatrix(m));
  EXPECT_NEAR(e.values(0), 1, 1e-15);
  EXPECT_NEAR(e.values(1), 2, 1e-15);
  EXPECT_NEAR(e.values(2), 3, 1e-15);
}

TEST(HermitianEig, PauliX) {
  const EigenDecomposition e = hermitian_eig(HermitianMatrix(sigma_x()));
  EXPECT_NEAR(e.values(0), -1, 1e-15);
  EXPECT_NEAR(e.values(1), 1, 1e-15);
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(e.vectors(0, 0)), s, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(1, 0)), s, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(0, 0) + e.vectors(1, 0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(0, 1) - e.vectors(1, 1)), 0.0, 1e-14);
}

TEST(HermitianEig, RandomReconstructionAndOrthonormality) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (Index n : {2, 3, 4, 9, 16}) {
      const HermitianMatrix m = random_hermitian(n, seed * 31 + static_cast<std::uint64_t>(n));
      const EigenDecomposition e = hermitian_eig(m);
      const double scale = std::max(1.0, m.matrix().norm());
      const ComplexMatrix residual =
          m.matrix() * e.vectors - e.vectors * e.values.cast<Complex>().asDiagonal();
      EXPECT_LE(residual.norm(), 1e-10 * scale);
      EXPECT_LE((e.vectors.adjoint() * e.vectors - ComplexMatrix::Identity(n, n)).norm(), 1e-10);
      for (Index k = 1; k < n; ++k) EXPECT_LE(e.values(k - 1), e.values(k));
    }
  }
}

TEST(HermitianEig, AgreesWithEigenSolver) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const HermitianMatrix m = random_hermitian(16, 1000 + seed);
    const RealVector ours = eigenvalues(m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ref(m.matrix());
    EXPECT_LT((ours - ref.eigenvalues()).norm(), 1e-11);
  }
}

TEST(HermitianEig, DegenerateSpectrum) {
  dl::rng::CounterRng g(77);
  const ComplexMatrix q = g.complex_gaussian(6, 6).householderQr().householderQ();
  ComplexMatrix d = ComplexMatrix::Zero(6, 6);
  d.diagonal() << 1, 1, 1, -2, -2, 5;
  const HermitianMatrix m = HermitianMatrix::symmetrized(q * d * q.adjoint());
  const RealVector v = eigenvalues(m);
  EXPECT_NEAR(v(0), -2, 1e-12);
  EXPECT_NEAR(v(1), -2, 1e-12);
  EXPECT_NEAR(v(2), 1, 1e-12);
  EXPECT_NEAR(v(5), 5, 1e-12);
}

TEST(Norms, TraceNormOfDensityOperator) {
  dl::rng::CounterRng g(4);
  const ComplexMatrix a = g.complex_gaussian(3, 3);
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace();
  EXPECT_NEAR(trace_norm(HermitianMatrix::symmetrized(rho)), 1.0, 1e-14);
}

TEST(Norms, OrthogonalPureStates) {
  ComplexVector zero(2), one(2), plus(2);
  zero << 1, 0;
  one << 0, 1;
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  EXPECT_NEAR(trace_norm(HermitianMatrix::projector(zero) - HermitianMatrix::projector(one)), 2.0,
              1e-14);
  EXPECT_NEAR(trace_norm(HermitianMatrix::projector(zero) - HermitianMatrix::projector(plus)),
              std::sqrt(2.0), 1e-14);
}

TEST(Norms, OperatorNormOfIdentity) {
  EXPECT_NEAR(operator_norm(HermitianMatrix::identity(4)), 1.0, 1e-15);
}

TEST(Norms, SchattenOrdering) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const HermitianMatrix m = random_hermitian(5, 200 + seed);
    const double t = trace_norm(m), f = frobenius_norm(m.matrix()), o = operator_norm(m);
    EXPECT_GE(t + 1e-12, f);
    EXPECT_GE(f + 1e-12, o);
  }
}

TEST(Vec, ColumnStacking) {
  ComplexMatrix m(2, 2);
  m << 1, 3, 2, 4;
  const ComplexVector v = vec(m);
  for (Index k = 0; k < 4; ++k) EXPECT_EQ(v(k), Complex(static_cast<double>(k + 1), 0));
  EXPECT_EQ(unvec(v, 2, 2), m);
  EXPECT_THROW(unvec(v, 3, 2), dl::DimensionMismatch);
}

TEST(Vec, SandwichIdentity) {
  dl::rng::CounterRng g(9);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = g.complex_gaussian(3, 3);
    const ComplexMatrix rho = g.complex_gaussian(3, 3);
    const ComplexMatrix b = g.complex_gaussian(3, 3);
    const ComplexVector lhs = vec(a * rho * b);
    const ComplexVector rhs = kron(b.transpose(), a) * vec(rho);
    EXPECT_LT((lhs - rhs).norm(), 1e-12);
  }
}

TEST(Spectral, PositivePartAndProjector) {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m.diagonal() << -1, 0.5, 2;
  const HermitianMatrix h(m);
  const HermitianMatrix pos = positive_part(h);
  EXPECT_NEAR(pos.trace(), 2.5, 1e-15);
  const HermitianMatrix proj = positive_projector(h, 1e-12);
  EXPECT_NEAR(proj.trace(), 2.0, 1e-15);
  const HermitianMatrix clipped = clip_spectrum(h, 0.0, 1.0);
  EXPECT_NEAR(clipped.trace(), 1.5, 1e-15);
}

TEST(Spectral, PsdSqrtSquaresBack) {
  dl::rng::CounterRng g(12);
  const ComplexMatrix a = g.complex_gaussian(4, 4);
  const HermitianMatrix p = HermitianMatrix::symmetrized(a * a.adjoint());
  const HermitianMatrix s = psd_sqrt(p);
  EXPECT_LT((s.matrix() * s.matrix() - p.matrix()).norm(), 1e-11);
}

TEST(Inner, RealHilbertSchmidt) {
  const HermitianMatrix a = random_hermitian(4, 1);
  const HermitianMatrix b = random_hermitian(4, 2);
  EXPECT_NEAR(inner(a, b), (a.matrix().adjoint() * b.matrix()).trace().real(), 1e-12);
}
