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

#include "sdp.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "errors.hpp"

namespace diamondlab::sdp {

namespace {

using linalg::Complex;
using linalg::ComplexVector;
using linalg::RealVector;
using RealMatrix = Eigen::MatrixXd;

constexpr double kStepDamping = 0.98;
constexpr double kPinvThreshold = 1e-14;

HermitianMatrix sym(const ComplexMatrix& m) { return HermitianMatrix::symmetrized(m); }

// Columns are vec(G_k) for the orthonormal Hermitian basis of n x n matrices:
// diagonal units, then (E_ab + E_ba)/sqrt2 and i(E_ab - E_ba)/sqrt2 for a < b.
ComplexMatrix hermitian_basis(Index n) {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix t = ComplexMatrix::Zero(n * n, n * n);
  Index k = 0;
  for (Index a = 0; a < n; ++a) t(a * n + a, k++) = 1.0;
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b) {
      t(b * n + a, k) = s;
      t(a * n + b, k) = s;
      ++k;
      t(b * n + a, k) = Complex(0, s);
      t(a * n + b, k) = Complex(0, -s);
      ++k;
    }
  return t;
}

// Matrix of Tr_B acting on column-stacked operators of A (x) B.
ComplexMatrix partial_trace_map(Index dim_a, Index dim_b) {
  const Index n = dim_a * dim_b;
  ComplexMatrix p = ComplexMatrix::Zero(dim_a * dim_a, n * n);
  for (Index a = 0; a < dim_a; ++a)
    for (Index ap = 0; ap < dim_a; ++ap)
      for (Index b = 0; b < dim_b; ++b) p(ap * dim_a + a, (ap * dim_b + b) * n + (a * dim_b + b)) = 1.0;
  return p;
}

struct Block {
  Index n = 0;
  ComplexMatrix c;  // n x n
  ComplexMatrix a;  // n^2 x m, column i = vec(A_i)
};

struct Iterate {
  std::vector<ComplexMatrix> x;
  std::vector<ComplexMatrix> s;
  RealVector y;
};

struct Direction {
  std::vector<ComplexMatrix> dx;
  std::vector<ComplexMatrix> ds;
  RealVector dy;
};

class WatrousProblem {
 public:
  WatrousProblem(const HermitianMatrix& j, Index dim_a, Index dim_b)
      : j_(j), dim_a_(dim_a), dim_b_(dim_b), n_(dim_a * dim_b) {
    basis_ = hermitian_basis(n_);
    const Index nn = n_ * n_;
    m_ = nn + 1;
    b_ = RealVector::Zero(m_);
    b_(nn) = -1.0;

    Block z_block;
    z_block.n = n_;
    z_block.c = ComplexMatrix::Zero(n_, n_);
    z_block.a = ComplexMatrix::Zero(nn, m_);
    z_block.a.leftCols(nn) = -basis_;
    Block zj_block = z_block;
    zj_block.c = -j.matrix();
    Block t_block;
    t_block.n = dim_a_;
    t_block.c = ComplexMatrix::Zero(dim_a_, dim_a_);
    t_block.a = ComplexMatrix::Zero(dim_a_ * dim_a_, m_);
    t_block.a.leftCols(nn) = partial_trace_map(dim_a_, dim_b_) * basis_;
    t_block.a.col(nn) = -linalg::vec(ComplexMatrix::Identity(dim_a_, dim_a_));
    blocks_ = {z_block, zj_block, t_block};
  }

  Index m() const { return m_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const RealVector& b() const { return b_; }

  RealVector apply_a(const std::vector<ComplexMatrix>& x) const {
    RealVector out = RealVector::Zero(m_);
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      out += (blocks_[k].a.adjoint() * linalg::vec(x[k])).real();
    return out;
  }

  ComplexMatrix apply_at(std::size_t k, const RealVector& y) const {
    const ComplexVector v = blocks_[k].a * y.cast<Complex>();
    const ComplexMatrix m = linalg::unvec(v, blocks_[k].n, blocks_[k].n);
    return 0.5 * (m + m.adjoint());
  }

  Iterate initial_point() const {
    const double lambda = std::max(0.0, linalg::max_eigenvalue(j_)) + 1.0;
    Iterate it;
    it.y = RealVector::Zero(m_);
    it.y.head(n_ * n_) =
        (basis_.adjoint() * linalg::vec(lambda * ComplexMatrix::Identity(n_, n_))).real();
    it.y(n_ * n_) = static_cast<double>(dim_b_) * lambda + 1.0;
    const double da = static_cast<double>(dim_a_);
    it.x = {ComplexMatrix::Identity(n_, n_) / (2 * da), ComplexMatrix::Identity(n_, n_) / (2 * da),
            ComplexMatrix::Identity(dim_a_, dim_a_) / da};
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      it.s.push_back(blocks_[k].c - apply_at(k, it.y));
    return it;
  }

  ComplexMatrix z_of(const RealVector& y) const {
    return linalg::unvec(basis_ * y.head(n_ * n_).cast<Complex>(), n_, n_);
  }

 private:
  HermitianMatrix j_;
  Index dim_a_, dim_b_, n_;
  Index m_ = 0;
  ComplexMatrix basis_;
  RealVector b_;
  std::vector<Block> blocks_;
};

double inner_re(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum().real();
}

// Largest alpha with x + alpha dx >= 0 (infinity when dx keeps x PSD).
double max_step(const ComplexMatrix& x, const ComplexMatrix& dx) {
  Eigen::LLT<ComplexMatrix> llt(x);
  if (llt.info() != Eigen::Success) return 0.0;
  const ComplexMatrix left = llt.matrixL().solve(dx);
  const ComplexMatrix both = llt.matrixL().solve(left.adjoint().eval());
  const double lowest = linalg::min_eigenvalue(sym(both));
  return lowest < 0.0 ? -1.0 / lowest : std::numeric_limits<double>::infinity();
}

class Newton {
 public:
  Newton(const WatrousProblem& problem, const Iterate& it) : problem_(problem), it_(it) {
    const auto& blocks = problem_.blocks();
    const Index m = problem_.m();
    schur_ = RealMatrix::Zero(m, m);
    ok_ = true;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      Eigen::LLT<ComplexMatrix> llt(it_.s[k]);
      if (llt.info() != Eigen::Success) {
        ok_ = false;
        return;
      }
      const Index n = blocks[k].n;
      s_inv_.push_back(llt.solve(ComplexMatrix::Identity(n, n)));
      const ComplexMatrix op = linalg::kron(s_inv_.back().transpose(), it_.x[k]);
      schur_ += (blocks[k].a.adjoint() * (op * blocks[k].a)).real();
    }
    schur_ = 0.5 * (schur_ + schur_.transpose());
    llt_.compute(schur_);
    use_ldlt_ = llt_.info() != Eigen::Success;
    if (use_ldlt_) {
      ldlt_.compute(schur_);
      ok_ = ldlt_.info() == Eigen::Success;
    }
    rp_ = problem_.b() - problem_.apply_a(it_.x);
    for (std::size_t k = 0; k < blocks.size(); ++k)
      rd_.push_back(blocks[k].c - it_.s[k] - problem_.apply_at(k, it_.y));
  }

  bool ok() const { return ok_; }

  // Solves for the direction whose complementarity target is
  // (sigma mu I - corr_k) for each block.
  Direction solve(double sigma_mu, const std::vector<ComplexMatrix>* corr) const {
    const auto& blocks = problem_.blocks();
    std::vector<ComplexMatrix> base(blocks.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const Index n = blocks[k].n;
      ComplexMatrix target = sigma_mu * ComplexMatrix::Identity(n, n);
      if (corr) target -= (*corr)[k];
      base[k] = target * s_inv_[k] - it_.x[k] - it_.x[k] * rd_[k] * s_inv_[k];
    }
    RealVector rhs = rp_ - problem_.apply_a(base);
    Direction d;
    d.dy = use_ldlt_ ? RealVector(ldlt_.solve(rhs)) : RealVector(llt_.solve(rhs));
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const ComplexMatrix at = problem_.apply_at(k, d.dy);
      const ComplexMatrix dx = base[k] + it_.x[k] * at * s_inv_[k];
      d.dx.push_back(0.5 * (dx + dx.adjoint()));
      d.ds.push_back(rd_[k] - at);
    }
    return d;
  }

 private:
  const WatrousProblem& problem_;
  const Iterate& it_;
  std::vector<ComplexMatrix> s_inv_;
  std::vector<ComplexMatrix> rd_;
  RealVector rp_;
  RealMatrix schur_;
  Eigen::LLT<RealMatrix> llt_;
  Eigen::LDLT<RealMatrix> ldlt_;
  bool use_ldlt_ = false;
  bool ok_ = true;
};

std::pair<double, double> step_lengths(const Iterate& it, const Direction& d) {
  double ap = std::numeric_limits<double>::infinity();
  double ad = ap;
  for (std::size_t k = 0; k < it.x.size(); ++k) {
    ap = std::min(ap, max_step(it.x[k], d.dx[k]));
    ad = std::min(ad, max_step(it.s[k], d.ds[k]));
  }
  return {ap, ad};
}

double total_dim(const Iterate& it) {
  double n = 0.0;
  for (const auto& x : it.x) n += static_cast<double>(x.rows());
  return n;
}

double complementarity(const Iterate& it) {
  double sum = 0.0;
  for (std::size_t k = 0; k < it.x.size(); ++k) sum += inner_re(it.x[k], it.s[k]);
  return sum / total_dim(it);
}

}  // namespace

PrimalPoint repair_primal(const ComplexMatrix& rho, const ComplexMatrix& w,
                          const HermitianMatrix& j, Index dim_a, Index dim_b) {
  HermitianMatrix r = linalg::clip_spectrum(sym(rho), 0.0, std::numeric_limits<double>::infinity());
  const double tr = r.trace();
  if (!(tr > 0.0)) {
    r = HermitianMatrix::identity(dim_a);
    r *= 1.0 / static_cast<double>(dim_a);
  } else {
    r *= 1.0 / tr;
  }
  const linalg::EigenDecomposition eig = linalg::hermitian_eig(r);
  RealVector root(dim_a), pinv_root(dim_a);
  for (Index k = 0; k < dim_a; ++k) {
    const double v = std::max(0.0, eig.values(k));
    root(k) = std::sqrt(v);
    pinv_root(k) = v > kPinvThreshold ? 1.0 / std::sqrt(v) : 0.0;
  }
  const ComplexMatrix id_b = ComplexMatrix::Identity(dim_b, dim_b);
  const ComplexMatrix sqrt_rho =
      eig.vectors * root.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  const ComplexMatrix pinv_sqrt_rho =
      eig.vectors * pinv_root.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  const ComplexMatrix big_root = linalg::kron(sqrt_rho, id_b);
  const ComplexMatrix big_pinv = linalg::kron(pinv_sqrt_rho, id_b);
  const HermitianMatrix q = linalg::clip_spectrum(sym(big_pinv * w * big_pinv), 0.0, 1.0);
  PrimalPoint p;
  p.rho = sym(eig.vectors * eig.values.cwiseMax(0.0).cast<Complex>().asDiagonal() *
              eig.vectors.adjoint());
  p.w = sym(big_root * q.matrix() * big_root);
  p.objective = linalg::inner(j, p.w);
  return p;
}

DualPoint repair_dual(const ComplexMatrix& z, const HermitianMatrix& j, Index dim_a,
                      Index dim_b) {
  HermitianMatrix zh = sym(z);
  const double shift =
      std::max({0.0, -linalg::min_eigenvalue(zh), -linalg::min_eigenvalue(zh - j)});
  const Index n = dim_a * dim_b;
  if (shift > 0.0) zh += shift * HermitianMatrix::identity(n);
  DualPoint d;
  d.z = zh;
  d.objective =
      linalg::max_eigenvalue(linalg::partial_trace(zh, dim_a, dim_b, linalg::Subsystem::A));
  return d;
}

SolverOutcome solve_watrous(const HermitianMatrix& j, Index dim_a, Index dim_b,
                            const SolverOptions& opts) {
  if (j.dim() != dim_a * dim_b) throw DimensionMismatch("solve_watrous: dimension mismatch");
  const WatrousProblem problem(j, dim_a, dim_b);
  Iterate it = problem.initial_point();

  SolverOutcome out;
  out.primal = repair_primal(it.x[2], it.x[1], j, dim_a, dim_b);
  out.dual = repair_dual(problem.z_of(it.y), j, dim_a, dim_b);
  out.reason = StopReason::IterationCap;

  int slow_steps = 0;
  for (int iter = 1; iter <= opts.max_iterations; ++iter) {
    out.iterations = iter;
    const double mu = complementarity(it);
    const Newton newton(problem, it);
    if (!newton.ok()) {
      out.reason = StopReason::Stalled;
      break;
    }
    const Direction pred = newton.solve(0.0, nullptr);
    auto [ap, ad] = step_lengths(it, pred);
    ap = std::min(1.0, ap);
    ad = std::min(1.0, ad);
    double mu_aff = 0.0;
    for (std::size_t k = 0; k < it.x.size(); ++k)
      mu_aff += inner_re(it.x[k] + ap * pred.dx[k], it.s[k] + ad * pred.ds[k]);
    mu_aff /= total_dim(it);
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    std::vector<ComplexMatrix> corr;
    for (std::size_t k = 0; k < it.x.size(); ++k) corr.push_back(pred.dx[k] * pred.ds[k]);
    const Direction dir = newton.solve(sigma * mu, &corr);
    auto [sp, sd] = step_lengths(it, dir);
    sp = std::min(1.0, kStepDamping * sp);
    sd = std::min(1.0, kStepDamping * sd);

    for (std::size_t k = 0; k < it.x.size(); ++k) {
      it.x[k] += sp * dir.dx[k];
      it.s[k] += sd * dir.ds[k];
    }
    it.y += sd * dir.dy;

    const PrimalPoint p = repair_primal(it.x[2], it.x[1], j, dim_a, dim_b);
    const DualPoint d = repair_dual(problem.z_of(it.y), j, dim_a, dim_b);
    if (p.objective > out.primal.objective) out.primal = p;
    if (d.objective < out.dual.objective) out.dual = d;

    if (out.dual.objective - out.primal.objective <= opts.gap_target) {
      out.reason = StopReason::Converged;
      break;
    }
    slow_steps = (sp < 1e-8 && sd < 1e-8) ? slow_steps + 1 : 0;
    if (slow_steps >= 3 || complementarity(it) < 1e-20) {
      out.reason = StopReason::Stalled;
      break;
    }
  }
  return out;
}

}  // namespace diamondlab::sdp
