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

#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "errors.hpp"
#include "rng.hpp"

namespace diamondlab::metrics {

namespace {

constexpr std::size_t kBlockSize = 4096;
constexpr std::uint64_t kFidelityStream = 0x4649444cULL;
constexpr std::uint64_t kUnitarityStream = 0x554e4954ULL;

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t n = 0;
};

// Runs `sample(rng)` over fixed-size blocks, each with its own substream, and
// reduces block moments in block order so the result does not depend on how
// blocks are spread over threads.
template <typename Sampler>
Estimate run_blocks(const MonteCarloOptions& opts, std::uint64_t stream, Sampler sample) {
  if (opts.samples < 100) throw InvalidArgument("Monte-Carlo estimate needs at least 100 samples");
  const std::size_t blocks = (opts.samples + kBlockSize - 1) / kBlockSize;
  std::vector<Moments> partial(blocks);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t b = first; b < blocks; b += stride) {
      rng::CounterRng g(rng::derive_key(rng::derive_key(opts.seed, stream), b));
      const std::size_t count = std::min(kBlockSize, opts.samples - b * kBlockSize);
      Moments m;
      for (std::size_t i = 0; i < count; ++i) {
        const double x = sample(g);
        m.sum += x;
        m.sum_sq += x * x;
      }
      m.n = count;
      partial[b] = m;
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(blocks)));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  double sum = 0.0, sum_sq = 0.0;
  for (const auto& m : partial) {
    sum += m.sum;
    sum_sq += m.sum_sq;
  }
  const double n = static_cast<double>(opts.samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n), opts.samples};
}

}  // namespace

double avg_fidelity(const Channel& c) {
  const double d = static_cast<double>(c.dim());
  return (c.liouville().trace().real() + c.identity_image_trace()) / (d * (d + 1.0));
}

double avg_error_rate(const Channel& c) { return 1.0 - avg_fidelity(c); }

double unitarity(const Channel& c) {
  const double d = static_cast<double>(c.dim());
  return channel::block_decompose(c).e_u.squaredNorm() / (d * d - 1.0);
}

MetricReport report(const Channel& c) {
  MetricReport m;
  m.d = c.dim();
  m.f_avg = avg_fidelity(c);
  m.r = 1.0 - m.f_avg;
  m.u = unitarity(c);
  return m;
}

double avg_error_rate_on_subspace(const Channel& c, const std::vector<Index>& indices) {
  return avg_error_rate(
      channel::compress_to_subspace(c, channel::coordinate_isometry(c.dim(), indices)));
}

Estimate avg_fidelity_haar_mc(const Channel& c, const MonteCarloOptions& opts) {
  const Index d = c.dim();
  return run_blocks(opts, kFidelityStream, [&](rng::CounterRng& g) {
    const linalg::ComplexVector psi = g.haar_state(d);
    double value = 0.0;
    for (const auto& k : c.kraus()) value += (psi.adjoint() * k * psi).squaredNorm();
    return value;
  });
}

Estimate unitarity_haar_mc(const Channel& c, const MonteCarloOptions& opts) {
  const Index d = c.dim();
  const double dd = static_cast<double>(d);
  const linalg::ComplexMatrix id = linalg::ComplexMatrix::Identity(d, d);
  return run_blocks(opts, kUnitarityStream, [&](rng::CounterRng& g) {
    const linalg::ComplexVector psi = g.haar_state(d);
    const linalg::ComplexMatrix traceless = psi * psi.adjoint() - id / dd;
    linalg::ComplexMatrix image = linalg::ComplexMatrix::Zero(d, d);
    for (const auto& k : c.kraus()) image += k * traceless * k.adjoint();
    const linalg::ComplexMatrix reduced = image - image.trace() * id / dd;
    return dd / (dd - 1.0) * reduced.squaredNorm();
  });
}

ChoiIdentitySides choi_hs_identity(const Channel& c, ChoiIdentityForm form) {
  const double d = static_cast<double>(c.dim());
  const channel::BlockDecomposition b = channel::block_decompose(c);
  const double u = b.e_u.squaredNorm() / (d * d - 1.0);
  ChoiIdentitySides s;
  s.lhs = c.choi().matrix().squaredNorm();
  const double leak = b.e_nu.squaredNorm() + b.e_sdl.squaredNorm();
  const double t = c.identity_image_trace() / d;
  if (form == ChoiIdentityForm::Resolved) {
    s.rhs = (d * d - 1.0) * u + leak + t * t;
  } else {
    s.rhs = (d * d + 1.0) * u + leak + t;
  }
  s.residual = std::abs(s.lhs - s.rhs);
  return s;
}

double choi_hs_identity_check(const Channel& c, ChoiIdentityForm form) {
  return choi_hs_identity(c, form).residual;
}

}  // namespace diamondlab::metrics
