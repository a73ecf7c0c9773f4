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

#include "diamond.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "errors.hpp"
#include "rng.hpp"
#include "sdp.hpp"

namespace diamondlab::diamond {

namespace {

using linalg::Complex;
using linalg::ComplexVector;
using linalg::RealVector;

void check_dims(const HermitianMatrix& j, Dims dims) {
  if (dims.a <= 0 || dims.b <= 0 || dims.a * dims.b != j.dim()) {
    std::ostringstream os;
    os << "diamond: dims (" << dims.a << ", " << dims.b << ") do not factor a " << j.dim() << "x"
       << j.dim() << " Choi matrix";
    throw DimensionMismatch(os.str());
  }
}

double negativity(const HermitianMatrix& m) { return std::max(0.0, -linalg::min_eigenvalue(m)); }

void check_probability(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << name << " must lie in [0, 1], got " << x;
    throw InvalidArgument(os.str());
  }
}

ComplexVector basis_ket(Index dim, Index a, Index b) {
  ComplexVector v = ComplexVector::Zero(dim * dim);
  v(a * dim + b) = 1.0;
  return v;
}

// Euclidean projection onto the probability simplex.
RealVector project_simplex(const RealVector& v) {
  RealVector sorted = v;
  std::sort(sorted.data(), sorted.data() + sorted.size(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (Index k = 0; k < sorted.size(); ++k) {
    cumulative += sorted(k);
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted(k) - candidate > 0.0) theta = candidate;
  }
  return (v.array() - theta).cwiseMax(0.0);
}

}  // namespace

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::MaxIter: return "max_iter";
    case Status::InfeasibleInput: return "infeasible_input";
  }
  return "unknown";
}

const char* to_string(CertificateKind k) {
  return k == CertificateKind::Primal ? "primal" : "dual";
}

double Certificate::max_residual() const {
  double worst = 0.0;
  for (const auto& r : residuals) worst = std::max(worst, r.value);
  return worst;
}

Certificate primal_certificate(const HermitianMatrix& j_delta, Dims dims,
                               const HermitianMatrix& rho, const HermitianMatrix& w) {
  check_dims(j_delta, dims);
  if (rho.dim() != dims.a || w.dim() != j_delta.dim())
    throw DimensionMismatch("primal_certificate: rho or W has the wrong dimension");
  Certificate c;
  c.kind = CertificateKind::Primal;
  c.dims = dims;
  c.j_delta = j_delta;
  c.rho = rho;
  c.w = w;
  c.objective = linalg::inner(j_delta, w);
  const HermitianMatrix dominated =
      HermitianMatrix::symmetrized(linalg::kron(rho.matrix(), ComplexMatrix::Identity(dims.b, dims.b))) -
      w;
  c.residuals = {{"trace_rho", std::abs(rho.trace() - 1.0)},
                 {"rho_psd", negativity(rho)},
                 {"w_psd", negativity(w)},
                 {"rho_tensor_identity_minus_w_psd", negativity(dominated)}};
  return c;
}

Certificate dual_certificate(const HermitianMatrix& j_delta, Dims dims, const HermitianMatrix& z) {
  check_dims(j_delta, dims);
  if (z.dim() != j_delta.dim()) throw DimensionMismatch("dual_certificate: Z has the wrong dimension");
  Certificate c;
  c.kind = CertificateKind::Dual;
  c.dims = dims;
  c.j_delta = j_delta;
  c.z = z;
  c.objective = linalg::operator_norm(linalg::partial_trace(z, dims.a, dims.b, linalg::Subsystem::A));
  c.residuals = {{"z_psd", negativity(z)}, {"z_minus_j_psd", negativity(z - j_delta)}};
  return c;
}

DiamondResult solve_diamond(const HermitianMatrix& j_delta, Dims dims, double tol) {
  check_dims(j_delta, dims);
  if (!(tol > 0.0)) throw InvalidArgument("solve_diamond: tolerance must be positive");
  DiamondResult result;
  const HermitianMatrix reduced = linalg::partial_trace(j_delta, dims.a, dims.b, linalg::Subsystem::A);
  if (reduced.matrix().norm() > 1e-10)
    result.warnings.push_back(
        "Tr_B J is nonzero: the map is not a difference of trace-preserving maps, so the program "
        "value is the largest positive part rather than half the diamond norm");

  const double scale = linalg::operator_norm(j_delta);
  HermitianMatrix rho = HermitianMatrix::identity(dims.a) * (1.0 / static_cast<double>(dims.a));
  HermitianMatrix w = HermitianMatrix::zero(j_delta.dim());
  HermitianMatrix z = HermitianMatrix::zero(j_delta.dim());
  if (scale > 0.0) {
    const HermitianMatrix scaled = j_delta * (1.0 / scale);
    sdp::SolverOptions opts;
    opts.gap_target = std::max(1e-13, std::max(1e-12, 1e-3 * tol) / scale);
    const sdp::SolverOutcome out = sdp::solve_watrous(scaled, dims.a, dims.b, opts);
    result.iterations = out.iterations;
    rho = out.primal.rho;
    w = out.primal.w;
    z = sdp::repair_dual((out.dual.z * scale).matrix(), j_delta, dims.a, dims.b).z;
  }
  result.primal = primal_certificate(j_delta, dims, rho, w);
  result.dual = dual_certificate(j_delta, dims, z);
  result.rho = rho;
  result.w = w;
  result.z = z;
  result.primal_value = result.primal.objective;
  result.dual_value = result.dual.objective;
  result.gap = result.dual_value - result.primal_value;
  const bool certified = result.primal.feasible() && result.dual.feasible();
  result.status = (result.gap <= tol && certified) ? Status::Optimal : Status::MaxIter;
  return result;
}

DiamondResult solve_diamond(const ComplexMatrix& j_delta, Dims dims, double tol) {
  if (j_delta.rows() != j_delta.cols() || !linalg::is_finite(j_delta) ||
      linalg::hermiticity_defect(j_delta) > linalg::kHermitianTol) {
    DiamondResult r;
    r.status = Status::InfeasibleInput;
    r.primal_value = -std::numeric_limits<double>::infinity();
    r.dual_value = std::numeric_limits<double>::infinity();
    r.gap = std::numeric_limits<double>::infinity();
    r.warnings.push_back("input matrix is not Hermitian");
    return r;
  }
  return solve_diamond(HermitianMatrix::symmetrized(j_delta), dims, tol);
}

DiamondResult diamond_distance(const Channel& e, const Channel& reference, double tol) {
  return solve_diamond(channel::difference_choi(reference, e), {e.dim(), e.dim()}, tol);
}

DiamondResult diamond_distance(const Channel& e, double tol) {
  return diamond_distance(e, channel::identity(e.dim()), tol);
}

MgeBounds mge_bounds(const HermitianMatrix& j_delta, Dims dims) {
  check_dims(j_delta, dims);
  const HermitianMatrix proj = linalg::positive_projector(j_delta, 1e-12);
  const double inv_d = 1.0 / static_cast<double>(dims.a);
  MgeBounds b;
  b.primal = primal_certificate(j_delta, dims, HermitianMatrix::identity(dims.a) * inv_d, proj * inv_d);
  const HermitianMatrix z = HermitianMatrix::symmetrized(proj.matrix() * j_delta.matrix() * proj.matrix());
  b.dual = dual_certificate(j_delta, dims, z);
  b.lower = b.primal.objective;
  b.upper = b.dual.objective;
  return b;
}

Bracket choi_norm_bounds(const HermitianMatrix& j_delta, Dims dims) {
  check_dims(j_delta, dims);
  const double norm = linalg::trace_norm(j_delta);
  return {norm / (2.0 * static_cast<double>(dims.a)), norm / 2.0};
}

Certificate ad_dual_certificate(double p, double gamma) {
  check_probability(p, "ad_dual_certificate: p");
  check_probability(gamma, "ad_dual_certificate: gamma");
  const double decay = 1.0 - std::sqrt(1.0 - gamma);
  ComplexMatrix j = ComplexMatrix::Zero(4, 4);
  j(0, 0) = (1.0 - p) * gamma;
  j(1, 1) = -(1.0 - p) * gamma;
  j(2, 2) = -p * gamma;
  j(3, 3) = p * gamma;
  j(0, 3) = j(3, 0) = decay;

  const double x = (decay + gamma / 2.0) / 2.0;
  const double y0 = std::max(gamma / 2.0 - p * gamma, 0.0);
  const double y1 = std::max(0.0, p * gamma - gamma / 2.0);
  ComplexMatrix z = ComplexMatrix::Zero(4, 4);
  z(0, 0) = x + y0;
  z(3, 3) = x + y1;
  z(0, 3) = z(3, 0) = x;
  return dual_certificate(HermitianMatrix(j), {2, 2}, HermitianMatrix(z));
}

Certificate il_dual_certificate(double p) {
  check_probability(p, "il_dual_certificate: p");
  constexpr Index d = 3, l = 2;
  const double decay = 1.0 - std::sqrt(1.0 - p);
  const ComplexVector k00 = basis_ket(d, 0, 0), k11 = basis_ket(d, 1, 1), kll = basis_ket(d, l, l),
                      k1l = basis_ket(d, 1, l);
  ComplexMatrix j = -p * k11 * k11.adjoint() + p * k1l * k1l.adjoint();
  j -= decay * (k00 * k11.adjoint() + k11 * k00.adjoint() + kll * k11.adjoint() + k11 * kll.adjoint());
  const ComplexVector pair = k00 + kll;
  const ComplexMatrix z = decay * pair * pair.adjoint() + p * k1l * k1l.adjoint();
  return dual_certificate(HermitianMatrix(j), {d, d}, HermitianMatrix(z));
}

ExactValue il2_exact(double p, Index rank, Index dim) {
  check_probability(p, "il2_exact: p");
  if (dim < 2) throw InvalidArgument("il2_exact: dimension must be at least 2");
  if (rank < 1 || rank > dim - 1) {
    std::ostringstream os;
    os << "il2_exact: rank must lie in [1, " << dim - 1 << "], got " << rank;
    throw InvalidArgument(os.str());
  }
  const double dd = static_cast<double>(dim);
  const channel::BellState bell = channel::bell_state(dim);
  ComplexVector psi_p = ComplexVector::Zero(dim * dim);
  for (Index k = 0; k < rank; ++k) psi_p(k * dim + k) = 1.0 / std::sqrt(dd);
  const HermitianMatrix j = HermitianMatrix::symmetrized(
      p * dd * (bell.vector * bell.vector.adjoint() - psi_p * psi_p.adjoint()));

  const Index last = dim - 1;
  ComplexVector e_last = ComplexVector::Zero(dim);
  e_last(last) = 1.0;
  const Dims dims{dim, dim};
  ExactValue out;
  out.primal = primal_certificate(j, dims, HermitianMatrix::projector(e_last),
                                  HermitianMatrix::projector(basis_ket(dim, last, last)));
  out.dual = dual_certificate(
      j, dims, HermitianMatrix::symmetrized(p * dd * bell.vector * bell.vector.adjoint()));
  out.value = p;
  return out;
}

double unitary_diamond(const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.rows() == 0)
    throw InvalidArgument("unitary_diamond: matrix must be square and nonempty");
  const Index d = u.rows();
  if ((u.adjoint() * u - ComplexMatrix::Identity(d, d)).norm() > 1e-10)
    throw InvalidArgument("unitary_diamond: matrix is not unitary to 1e-10");
  const Eigen::ComplexEigenSolver<ComplexMatrix> solver(u, false);
  ComplexVector lambda = solver.eigenvalues();
  if (d == 1) return 0.0;
  for (Index k = 0; k < d; ++k) lambda(k) /= std::abs(lambda(k));

  // Gradient of |sum_k w_k lambda_k|^2 is 2 Re(conj(lambda_k) s).
  const double step = 1.0 / (2.0 * static_cast<double>(d));
  auto objective = [&](const RealVector& w) { return std::norm((lambda.array() * w.cast<Complex>().array()).sum()); };
  rng::CounterRng g(rng::derive_key(0x756e6974ULL, static_cast<std::uint64_t>(d)));
  double best = std::numeric_limits<double>::infinity();
  RealVector best_w;
  for (int restart = 0; restart < 64; ++restart) {
    RealVector w(d);
    if (restart == 0) {
      w.setConstant(1.0 / static_cast<double>(d));
    } else {
      for (Index k = 0; k < d; ++k) w(k) = -std::log(g.uniform());
      w /= w.sum();
    }
    double f = objective(w);
    for (int iter = 0; iter < 20000 && f > 1e-30; ++iter) {
      const Complex s = (lambda.array() * w.cast<Complex>().array()).sum();
      RealVector grad(d);
      for (Index k = 0; k < d; ++k) grad(k) = 2.0 * (std::conj(lambda(k)) * s).real();
      const RealVector next = project_simplex(w - step * grad);
      const double moved = (next - w).norm();
      w = next;
      f = objective(w);
      if (moved < 1e-12 * step) break;
    }
    if (f < best) {
      best = f;
      best_w = w;
    }
  }
  // 1 - |s|^2 = (1/2) sum_jk w_j w_k |lambda_j - lambda_k|^2 on the unit circle.
  double defect = 0.0;
  for (Index j = 0; j < d; ++j)
    for (Index k = j + 1; k < d; ++k) defect += best_w(j) * best_w(k) * std::norm(lambda(j) - lambda(k));
  return std::sqrt(std::max(0.0, defect));
}

}  // namespace diamondlab::diamond
