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

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace diamondlab::linalg {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiTol = 1e-13;

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
    throw DimensionMismatch(os.str());
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (Index c = 0; c < a.cols(); ++c)
    for (Index r = 0; r < a.rows(); ++r)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

HermitianMatrix spectral_map(const HermitianMatrix& m, auto&& f) {
  const EigenDecomposition eig = hermitian_eig(m);
  RealVector mapped(eig.values.size());
  for (Index i = 0; i < mapped.size(); ++i) mapped(i) = f(eig.values(i));
  return HermitianMatrix::symmetrized(eig.vectors * mapped.asDiagonal() *
                                      eig.vectors.adjoint());
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  require_square(m, "HermitianMatrix");
  if (!is_finite(m)) throw InvalidArgument("HermitianMatrix: non-finite entry");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    std::ostringstream os;
    os << "HermitianMatrix: input is not Hermitian (relative defect " << defect << ")";
    throw InvalidArgument(os.str());
  }
  m_ = (m + m.adjoint()) * 0.5;
}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  require_square(m, "HermitianMatrix::symmetrized");
  HermitianMatrix h;
  h.m_ = (m + m.adjoint()) * 0.5;
  return h;
}

HermitianMatrix HermitianMatrix::zero(Index dim) {
  HermitianMatrix h;
  h.m_ = ComplexMatrix::Zero(dim, dim);
  return h;
}

HermitianMatrix HermitianMatrix::identity(Index dim) {
  HermitianMatrix h;
  h.m_ = ComplexMatrix::Identity(dim, dim);
  return h;
}

HermitianMatrix HermitianMatrix::projector(const ComplexVector& v) {
  return symmetrized(v * v.adjoint());
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  if (o.dim() != dim()) throw DimensionMismatch("HermitianMatrix: dimension mismatch in +");
  m_ += o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  if (o.dim() != dim()) throw DimensionMismatch("HermitianMatrix: dimension mismatch in -");
  m_ -= o.m_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

bool is_finite(const ComplexMatrix& m) {
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r)
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) return false;
  return true;
}

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).norm() / std::max(1.0, m.norm());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

HermitianMatrix partial_trace(const HermitianMatrix& m, Index dim_a, Index dim_b,
                              Subsystem keep) {
  if (dim_a <= 0 || dim_b <= 0 || m.dim() != dim_a * dim_b) {
    std::ostringstream os;
    os << "partial_trace: matrix of dimension " << m.dim() << " is not " << dim_a << "x"
       << dim_b;
    throw DimensionMismatch(os.str());
  }
  const ComplexMatrix& x = m.matrix();
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
    for (Index i = 0; i < dim_a; ++i)
      for (Index j = 0; j < dim_a; ++j)
        for (Index k = 0; k < dim_b; ++k) out(i, j) += x(i * dim_b + k, j * dim_b + k);
    return HermitianMatrix::symmetrized(out);
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
  for (Index k = 0; k < dim_b; ++k)
    for (Index l = 0; l < dim_b; ++l)
      for (Index i = 0; i < dim_a; ++i) out(k, l) += x(i * dim_b + k, i * dim_b + l);
  return HermitianMatrix::symmetrized(out);
}

EigenDecomposition hermitian_eig(const HermitianMatrix& m) {
  const Index n = m.dim();
  ComplexMatrix a = m.matrix();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double tol = kJacobiTol * a.norm();

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= tol) {
      converged = true;
      break;
    }
    if (sweep == kMaxJacobiSweeps) break;
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Rotate the phase of a_pq away, then apply a real Jacobi rotation.
        const Complex phase_conj = std::conj(apq / mag);
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex g_qp = -s * phase_conj;
        const Complex g_qq = c * phase_conj;

        for (Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + g_qp * akq;
          a(k, q) = s * akp + g_qq * akq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp + g_qp * vkq;
          v(k, q) = s * vkp + g_qq * vkq;
        }
        for (Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(g_qp) * aqk;
          a(q, k) = s * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged) {
    std::ostringstream os;
    os << "hermitian_eig: no convergence after " << kMaxJacobiSweeps << " sweeps (n=" << n
       << ")";
    throw NoConvergence(os.str());
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return a(i, i).real() < a(j, j).real(); });
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

RealVector eigenvalues(const HermitianMatrix& m) { return hermitian_eig(m).values; }

double min_eigenvalue(const HermitianMatrix& m) {
  if (m.dim() == 0) return 0.0;
  return eigenvalues(m).minCoeff();
}

double max_eigenvalue(const HermitianMatrix& m) {
  if (m.dim() == 0) return 0.0;
  return eigenvalues(m).maxCoeff();
}

double trace_norm(const HermitianMatrix& m) { return eigenvalues(m).cwiseAbs().sum(); }

double operator_norm(const HermitianMatrix& m) {
  if (m.dim() == 0) return 0.0;
  return eigenvalues(m).cwiseAbs().maxCoeff();
}

double frobenius_norm(const ComplexMatrix& m) { return m.norm(); }

ComplexVector vec(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r) v(c * m.rows() + r) = m(r, c);
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols) {
  if (rows < 0 || cols < 0 || v.size() != rows * cols) {
    std::ostringstream os;
    os << "unvec: vector of length " << v.size() << " cannot be reshaped to " << rows << "x"
       << cols;
    throw DimensionMismatch(os.str());
  }
  ComplexMatrix m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = v(c * rows + r);
  return m;
}

double inner(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner: dimension mismatch");
  return a.matrix().conjugate().cwiseProduct(b.matrix()).sum().real();
}

HermitianMatrix positive_part(const HermitianMatrix& m, double threshold) {
  return spectral_map(m, [threshold](double x) { return x > threshold ? x : 0.0; });
}

HermitianMatrix positive_projector(const HermitianMatrix& m, double threshold) {
  return spectral_map(m, [threshold](double x) { return x > threshold ? 1.0 : 0.0; });
}

HermitianMatrix psd_sqrt(const HermitianMatrix& m) {
  return spectral_map(m, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

HermitianMatrix clip_spectrum(const HermitianMatrix& m, double lo, double hi) {
  return spectral_map(m, [lo, hi](double x) { return std::clamp(x, lo, hi); });
}

}  // namespace diamondlab::linalg
