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

#include "channel.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "errors.hpp"

namespace diamondlab::channel {

namespace {

Index isqrt_exact(Index n, const char* what) {
  const auto r = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (r * r != n) {
    std::ostringstream os;
    os << what << ": dimension " << n << " is not a perfect square";
    throw DimensionMismatch(os.str());
  }
  return r;
}

ComplexMatrix pauli(int k) {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  switch (k) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: p << 1, 0, 0, -1; break;
  }
  return p;
}

std::vector<ComplexMatrix> gell_mann_basis() {
  const Complex i(0, 1);
  std::vector<ComplexMatrix> out;
  out.push_back(ComplexMatrix::Identity(3, 3) / std::sqrt(3.0));
  auto unit = [] { return ComplexMatrix::Zero(3, 3).eval(); };
  auto sym = [&](Index a, Index b) {
    ComplexMatrix m = unit();
    m(a, b) = 1;
    m(b, a) = 1;
    return m;
  };
  auto asym = [&](Index a, Index b) {
    ComplexMatrix m = unit();
    m(a, b) = -i;
    m(b, a) = i;
    return m;
  };
  ComplexMatrix l3 = unit();
  l3(0, 0) = 1;
  l3(1, 1) = -1;
  ComplexMatrix l8 = unit();
  l8(0, 0) = 1;
  l8(1, 1) = 1;
  l8(2, 2) = -2;
  l8 /= std::sqrt(3.0);
  const ComplexMatrix gm[] = {sym(0, 1), asym(0, 1), l3, sym(0, 2), asym(0, 2),
                              sym(1, 2), asym(1, 2), l8};
  for (const auto& g : gm) out.push_back(g / std::sqrt(2.0));
  return out;
}

std::vector<ComplexMatrix> build_basis(Index dim) {
  std::vector<ComplexMatrix> out;
  switch (dim) {
    case 2:
      for (int k = 0; k < 4; ++k) out.push_back(pauli(k) / std::sqrt(2.0));
      return out;
    case 3:
      return gell_mann_basis();
    case 4:
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out.push_back(linalg::kron(pauli(a), pauli(b)) / 2.0);
      return out;
    default: {
      std::ostringstream os;
      os << "operator basis: unsupported dimension " << dim << " (supported: 2, 3, 4)";
      throw InvalidArgument(os.str());
    }
  }
}

ComplexMatrix basis_change(Index dim) {
  const auto& basis = operator_basis(dim);
  ComplexMatrix t(dim * dim, dim * dim);
  for (Index k = 0; k < dim * dim; ++k) t.col(k) = linalg::vec(basis[static_cast<std::size_t>(k)]);
  return t;
}

}  // namespace

Channel Channel::from_kraus(std::vector<ComplexMatrix> kraus) {
  if (kraus.empty()) throw InvalidArgument("from_kraus: empty Kraus list");
  const Index d = kraus.front().rows();
  if (d <= 0) throw DimensionMismatch("from_kraus: zero-dimensional Kraus operator");
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d) {
      std::ostringstream os;
      os << "from_kraus: Kraus operators must all be " << d << "x" << d << ", got " << k.rows()
         << "x" << k.cols();
      throw DimensionMismatch(os.str());
    }
    if (!linalg::is_finite(k)) throw InvalidArgument("from_kraus: non-finite Kraus entry");
  }

  ComplexMatrix gram = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus) gram += k.adjoint() * k;
  const HermitianMatrix gram_h = HermitianMatrix::symmetrized(gram);
  const double top = linalg::max_eigenvalue(gram_h);
  if (top > 1.0 + kChannelTol) {
    std::ostringstream os;
    os.precision(17);
    os << "from_kraus: sum K^dag K exceeds the identity (largest eigenvalue " << top
       << "); the map is not trace non-increasing";
    throw InvalidChannel(os.str());
  }

  Channel c;
  c.dim_ = d;
  c.kraus_ = std::move(kraus);
  c.trace_preserving_ = (gram - ComplexMatrix::Identity(d, d)).norm() <= kChannelTol;
  c.identity_image_trace_ = gram.trace().real();
  c.liouville_ = kraus_to_liouville(c);
  c.choi_ = kraus_to_choi(c);
  const ComplexMatrix image = c.apply(HermitianMatrix::identity(d)).matrix();
  c.unital_ = (image - ComplexMatrix::Identity(d, d)).norm() <= kChannelTol;

  const double lowest = linalg::min_eigenvalue(c.choi_);
  if (lowest < -kChannelTol * std::max(1.0, c.choi_.matrix().norm())) {
    std::ostringstream os;
    os << "from_kraus: Choi matrix has eigenvalue " << lowest;
    throw InvalidChannel(os.str());
  }
  return c;
}

HermitianMatrix Channel::apply(const HermitianMatrix& rho) const {
  if (rho.dim() != dim_) throw DimensionMismatch("Channel::apply: dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
  for (const auto& k : kraus_) out += k * rho.matrix() * k.adjoint();
  return HermitianMatrix::symmetrized(out);
}

BellState bell_state(Index dim) {
  if (dim <= 0) throw InvalidArgument("bell_state: dimension must be positive");
  BellState b;
  b.dim = dim;
  b.vector = ComplexVector::Zero(dim * dim);
  for (Index k = 0; k < dim; ++k) b.vector(k * dim + k) = 1.0 / std::sqrt(static_cast<double>(dim));
  return b;
}

Channel identity(Index dim) {
  return Channel::from_kraus({ComplexMatrix::Identity(dim, dim)});
}

Channel unitary(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionMismatch("unitary: matrix must be square");
  if ((u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm() > kChannelTol)
    throw InvalidArgument("unitary: matrix is not unitary to 1e-10");
  return Channel::from_kraus({u});
}

ComplexMatrix kraus_to_liouville(const Channel& c) {
  const Index d = c.dim();
  ComplexMatrix l = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& k : c.kraus()) l += linalg::kron(k.conjugate(), k);
  return l;
}

HermitianMatrix kraus_to_choi(const Channel& c) {
  const Index d = c.dim();
  ComplexMatrix j = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& k : c.kraus()) {
    const ComplexVector v = linalg::vec(k);
    j += v * v.adjoint();
  }
  return HermitianMatrix::symmetrized(j);
}

std::vector<ComplexMatrix> choi_to_kraus(const HermitianMatrix& j) {
  const Index d = isqrt_exact(j.dim(), "choi_to_kraus");
  const linalg::EigenDecomposition eig = linalg::hermitian_eig(j);
  std::vector<ComplexMatrix> out;
  for (Index k = eig.values.size() - 1; k >= 0; --k) {
    const double lambda = eig.values(k);
    if (lambda < -1e-8) {
      std::ostringstream os;
      os << "choi_to_kraus: Choi matrix has negative eigenvalue " << lambda
         << "; the map is not completely positive";
      throw InvalidChannel(os.str());
    }
    if (lambda > 1e-12) out.push_back(std::sqrt(lambda) * linalg::unvec(eig.vectors.col(k), d, d));
  }
  if (out.empty()) out.push_back(ComplexMatrix::Zero(d, d));
  return out;
}

ComplexMatrix reshuffle(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("reshuffle: matrix must be square");
  const Index d = isqrt_exact(m.rows(), "reshuffle");
  // out[(e, b), (c, a)] = m[(a, b), (c, e)] with (x, y) -> x * d + y.
  ComplexMatrix out(m.rows(), m.cols());
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index c = 0; c < d; ++c)
        for (Index e = 0; e < d; ++e) out(e * d + b, c * d + a) = m(a * d + b, c * d + e);
  return out;
}

HermitianMatrix liouville_to_choi(const ComplexMatrix& l) {
  return HermitianMatrix::symmetrized(reshuffle(l));
}

ComplexMatrix choi_to_liouville(const HermitianMatrix& j) { return reshuffle(j.matrix()); }

HermitianMatrix apply(const Channel& c, const HermitianMatrix& rho) { return c.apply(rho); }

Channel compose(const Channel& a, const Channel& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("compose: dimension mismatch");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& ka : a.kraus())
    for (const auto& kb : b.kraus()) kraus.push_back(ka * kb);
  return Channel::from_kraus(std::move(kraus));
}

Channel tensor(const Channel& a, const Channel& b) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& ka : a.kraus())
    for (const auto& kb : b.kraus()) kraus.push_back(linalg::kron(ka, kb));
  return Channel::from_kraus(std::move(kraus));
}

HermitianMatrix difference_choi(const Channel& a, const Channel& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("difference_choi: dimension mismatch");
  return a.choi() - b.choi();
}

const std::vector<ComplexMatrix>& operator_basis(Index dim) {
  static std::mutex mu;
  static std::map<Index, std::vector<ComplexMatrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(dim);
  if (it == cache.end()) it = cache.emplace(dim, build_basis(dim)).first;
  return it->second;
}

BlockDecomposition block_decompose(const Channel& c) {
  const Index d = c.dim();
  const Index n = d * d;
  const ComplexMatrix t = basis_change(d);
  const ComplexMatrix lb = t.adjoint() * c.liouville() * t;
  BlockDecomposition out;
  out.t = lb(0, 0).real();
  out.e_sdl = lb.block(0, 1, 1, n - 1).transpose();
  out.e_nu = lb.block(1, 0, n - 1, 1);
  out.e_u = lb.block(1, 1, n - 1, n - 1);
  return out;
}

ComplexMatrix reassemble(const BlockDecomposition& blocks, Index dim) {
  const Index n = dim * dim;
  if (blocks.e_u.rows() != n - 1 || blocks.e_sdl.size() != n - 1 || blocks.e_nu.size() != n - 1)
    throw DimensionMismatch("reassemble: block sizes do not match the dimension");
  ComplexMatrix lb(n, n);
  lb(0, 0) = blocks.t;
  lb.block(0, 1, 1, n - 1) = blocks.e_sdl.transpose();
  lb.block(1, 0, n - 1, 1) = blocks.e_nu;
  lb.block(1, 1, n - 1, n - 1) = blocks.e_u;
  const ComplexMatrix t = basis_change(dim);
  return t * lb * t.adjoint();
}

Channel project_to_subspace(const Channel& c, const HermitianMatrix& proj) {
  if (proj.dim() != c.dim()) throw DimensionMismatch("project_to_subspace: dimension mismatch");
  const ComplexMatrix& p = proj.matrix();
  if ((p * p - p).norm() > kChannelTol)
    throw InvalidArgument("project_to_subspace: operator is not an orthogonal projector");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(c.kraus().size());
  for (const auto& k : c.kraus()) kraus.push_back(p * k * p);
  return Channel::from_kraus(std::move(kraus));
}

Channel compress_to_subspace(const Channel& c, const ComplexMatrix& isometry) {
  if (isometry.rows() != c.dim() || isometry.cols() > c.dim() || isometry.cols() == 0)
    throw DimensionMismatch("compress_to_subspace: isometry shape does not match the channel");
  const Index k = isometry.cols();
  if ((isometry.adjoint() * isometry - ComplexMatrix::Identity(k, k)).norm() > kChannelTol)
    throw InvalidArgument("compress_to_subspace: columns are not orthonormal");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(c.kraus().size());
  for (const auto& op : c.kraus()) kraus.push_back(isometry.adjoint() * op * isometry);
  return Channel::from_kraus(std::move(kraus));
}

ComplexMatrix coordinate_isometry(Index dim, const std::vector<Index>& indices) {
  ComplexMatrix v = ComplexMatrix::Zero(dim, static_cast<Index>(indices.size()));
  for (std::size_t c = 0; c < indices.size(); ++c) {
    if (indices[c] < 0 || indices[c] >= dim)
      throw InvalidArgument("coordinate_isometry: basis index out of range");
    v(indices[c], static_cast<Index>(c)) = 1.0;
  }
  return v;
}

}  // namespace diamondlab::channel
