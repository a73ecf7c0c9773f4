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

#include "models.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <sstream>

#include "errors.hpp"
#include "rng.hpp"

namespace diamondlab::models {

namespace {

using linalg::Complex;
using std::numbers::pi;

void require_range(double x, double lo, double hi, const char* what) {
  if (!(x >= lo && x <= hi)) {
    std::ostringstream os;
    os.precision(17);
    os << what << " must lie in [" << lo << ", " << hi << "], got " << x;
    throw InvalidArgument(os.str());
  }
}

ComplexMatrix pauli_z() {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1;
  z(1, 1) = -1;
  return z;
}

ComplexMatrix z_rotation(double delta) {
  ComplexMatrix u = ComplexMatrix::Zero(2, 2);
  u(0, 0) = std::exp(Complex(0, -delta));
  u(1, 1) = std::exp(Complex(0, delta));
  return u;
}

ComplexMatrix haar_isometry(Index rows, Index cols, rng::CounterRng& g) {
  const ComplexMatrix a = g.complex_gaussian(rows, cols);
  const Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  for (Index k = 0; k < cols; ++k) {
    const Complex diag = r(k, k);
    if (std::abs(diag) > 0.0) q.col(k) *= diag / std::abs(diag);
  }
  return q;
}

std::vector<ComplexMatrix> slice(const ComplexMatrix& v, Index d, Index k) {
  std::vector<ComplexMatrix> kraus;
  for (Index i = 0; i < k; ++i) kraus.push_back(v.block(i * d, 0, d, d));
  return kraus;
}

double get(const std::map<std::string, double>& params, const std::string& key) {
  const auto it = params.find(key);
  if (it == params.end()) throw InvalidArgument("missing model parameter '" + key + "'");
  return it->second;
}

double get_or(const std::map<std::string, double>& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

Index get_count(const std::map<std::string, double>& params, const std::string& key, double fallback) {
  const double v = get_or(params, key, fallback);
  if (v != std::floor(v)) throw InvalidArgument("parameter '" + key + "' must be an integer");
  return static_cast<Index>(v);
}

void reject_unknown(const std::map<std::string, double>& params,
                    std::initializer_list<const char*> allowed, const std::string& model) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw InvalidArgument("model '" + model + "' has no parameter '" + key + "'");
  }
}

}  // namespace

const char* to_string(ModelName name) {
  switch (name) {
    case ModelName::CD: return "cd";
    case ModelName::AD: return "ad";
    case ModelName::IL: return "il";
    case ModelName::IL2: return "il2";
    case ModelName::CL: return "cl";
    case ModelName::U: return "unitary";
    case ModelName::CD2: return "cd2";
  }
  return "unknown";
}

double cd_error_rate(double p, double delta) {
  const double s = std::sin(delta);
  return 2.0 / 3.0 * (p * std::cos(2.0 * delta) + s * s);
}

double cd_diamond(double p, double delta) {
  return 0.5 * std::abs(1.0 - (1.0 - 2.0 * p) * std::exp(Complex(0, 2.0 * delta)));
}

double cd_unitarity(double p) { return 1.0 - 8.0 / 3.0 * p * (1.0 - p); }

double ad_error_rate(double gamma) { return (1.0 - std::sqrt(1.0 - gamma) + gamma / 2.0) / 3.0; }

double il_error_rate(double p) { return (1.0 - std::sqrt(1.0 - p) + p) / 3.0; }

double il_error_rate_full_space(double p) { return (1.0 - std::sqrt(1.0 - p) + p / 4.0) / 3.0; }

double il2_error_rate(double p, Index rank, Index dim) {
  const double k = static_cast<double>(rank), d = static_cast<double>(dim);
  return p * (1.0 - k * (k + 1.0) / ((d + 1.0) * d));
}

double cl_error_rate(double delta) {
  const double c = std::cos(delta);
  return (2.0 - c - c * c) / 3.0;
}

double unitary_error_rate(const ComplexMatrix& u) {
  const double d = static_cast<double>(u.rows());
  return (d * d - std::norm(u.trace())) / (d * (d + 1.0));
}

double cd2_error_rate(double p, double delta, double eps) {
  const double q = 1.0 - 2.0 * p;
  return 0.1 * (4.0 * (2.0 * p - 1.0) * std::cos(2.0 * delta) * std::cos(2.0 * eps) -
                q * q * std::cos(4.0 * delta) + 4.0 * p * (1.0 - p) + 5.0);
}

double cd2_unitarity(double p) {
  const double a = 8.0 * p * (1.0 - p) - 4.0;
  return (a * a - 1.0) / 15.0;
}

ModelSpec cd(double p, double delta) {
  require_range(p, 0.0, 1.0, "cd: p");
  require_range(delta, -pi / 2, pi / 2, "cd: delta");
  const ComplexMatrix u = z_rotation(delta);
  ModelSpec m{ModelName::CD, {{"p", p}, {"delta", delta}},
              Channel::from_kraus({std::sqrt(1.0 - p) * u, std::sqrt(p) * u * pauli_z()}), {}, {}};
  m.closed_forms.r = cd_error_rate(p, delta);
  m.closed_forms.d_exact = cd_diamond(p, delta);
  m.closed_forms.u = cd_unitarity(p);
  return m;
}

ModelSpec ad(double p, double gamma) {
  require_range(p, 0.0, 1.0, "ad: p");
  require_range(gamma, 0.0, 1.0, "ad: gamma");
  const double sp = std::sqrt(p), sq = std::sqrt(1.0 - p);
  const double keep = std::sqrt(1.0 - gamma), jump = std::sqrt(gamma);
  std::vector<ComplexMatrix> k(4, ComplexMatrix::Zero(2, 2));
  k[0](0, 0) = sp;
  k[0](1, 1) = sp * keep;
  k[1](0, 1) = sp * jump;
  k[2](0, 0) = sq * keep;
  k[2](1, 1) = sq;
  k[3](1, 0) = sq * jump;
  ModelSpec m{ModelName::AD, {{"p", p}, {"gamma", gamma}}, Channel::from_kraus(k), {}, {}};
  m.closed_forms.r = ad_error_rate(gamma);
  m.closed_forms.d_upper = 3.0 * ad_error_rate(gamma) * std::max(p, 1.0 - p);
  return m;
}

ModelSpec il(double p) {
  require_range(p, 0.0, 1.0, "il: p");
  ComplexMatrix k0 = ComplexMatrix::Zero(3, 3);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p);
  k0(2, 2) = 1.0;
  ComplexMatrix k1 = ComplexMatrix::Zero(3, 3);
  k1(2, 1) = std::sqrt(p);
  ModelSpec m{ModelName::IL, {{"p", p}}, Channel::from_kraus({k0, k1}), {}, {0, 1}};
  m.closed_forms.r = il_error_rate(p);
  m.closed_forms.d_upper = 2.0 * il_error_rate(p);
  return m;
}

ModelSpec il2(double p, Index rank, Index dim) {
  require_range(p, 0.0, 1.0, "il2: p");
  if (dim < 2) throw InvalidArgument("il2: dimension must be at least 2");
  if (rank < 1 || rank > dim - 1) {
    std::ostringstream os;
    os << "il2: rank must lie in [1, " << dim - 1 << "], got " << rank;
    throw InvalidArgument(os.str());
  }
  ComplexMatrix proj = ComplexMatrix::Zero(dim, dim);
  for (Index k = 0; k < rank; ++k) proj(k, k) = 1.0;
  ModelSpec m{ModelName::IL2,
              {{"p", p}, {"rank", static_cast<double>(rank)}, {"dim", static_cast<double>(dim)}},
              Channel::from_kraus({std::sqrt(p) * proj, std::sqrt(1.0 - p) * ComplexMatrix::Identity(dim, dim)}),
              {},
              {}};
  m.closed_forms.r = il2_error_rate(p, rank, dim);
  m.closed_forms.d_exact = p;
  return m;
}

ModelSpec cl(double delta) {
  require_range(delta, -pi, pi, "cl: delta");
  ComplexMatrix u = ComplexMatrix::Zero(3, 3);
  u(0, 0) = 1.0;
  u(1, 1) = u(2, 2) = std::cos(delta);
  u(1, 2) = u(2, 1) = Complex(0, -std::sin(delta));
  ModelSpec m{ModelName::CL, {{"delta", delta}}, Channel::from_kraus({u}), {}, {0, 1}};
  const double r = cl_error_rate(delta);
  m.closed_forms.r = r;
  m.closed_forms.d_exact = std::abs(delta) <= pi / 2 ? std::abs(std::sin(delta)) : 1.0;
  if (std::abs(delta) <= pi / 2) {
    m.closed_forms.d_lower = std::sqrt(1.5 * r);
    m.closed_forms.d_upper = std::sqrt(2.0 * r);
  }
  return m;
}

ModelSpec unitary_model(const ComplexMatrix& u) {
  ModelSpec m{ModelName::U, {}, channel::unitary(u), {}, {}};
  const double d = static_cast<double>(u.rows());
  const double r = unitary_error_rate(u);
  m.closed_forms.r = r;
  m.closed_forms.u = 1.0;
  m.closed_forms.d_lower = std::sqrt((d + 1.0) / d) * std::sqrt(r);
  m.closed_forms.d_upper = std::sqrt((d + 1.0) * d) * std::sqrt(r);
  return m;
}

ModelSpec qubit_rotation(double delta) {
  require_range(delta, -pi, pi, "rotation: delta");
  ModelSpec m = unitary_model(z_rotation(delta));
  m.params = {{"delta", delta}};
  m.closed_forms.d_exact = std::abs(std::sin(delta));
  return m;
}

ModelSpec cd2(double p, double delta1, double delta2, double eps) {
  require_range(p, 0.0, 1.0, "cd2: p");
  require_range(delta1, -pi, pi, "cd2: delta1");
  require_range(delta2, -pi, pi, "cd2: delta2");
  require_range(eps, -pi, pi, "cd2: eps");
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix z = pauli_z();
  const std::vector<ComplexMatrix> single = {std::sqrt(1.0 - p) * id, std::sqrt(p) * z};
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b) {
      const double za = a == 0 ? 1.0 : -1.0, zb = b == 0 ? 1.0 : -1.0;
      u(2 * a + b, 2 * a + b) = std::exp(Complex(0, -(delta1 * za + delta2 * zb + eps * za * zb)));
    }
  std::vector<ComplexMatrix> kraus;
  for (const auto& k1 : single)
    for (const auto& k2 : single) kraus.push_back(u * linalg::kron(k1, k2));
  ModelSpec m{ModelName::CD2,
              {{"p", p}, {"delta1", delta1}, {"delta2", delta2}, {"eps", eps}},
              Channel::from_kraus(kraus),
              {},
              {}};
  if (delta1 == delta2) {
    m.closed_forms.r = cd2_error_rate(p, delta1, eps);
    m.closed_forms.u = cd2_unitarity(p);
    m.closed_forms.provisional = true;
  }
  return m;
}

std::vector<std::string> model_names() { return {"cd", "ad", "il", "il2", "cl", "rot", "cd2"}; }

ModelSpec make_model(const std::string& name, const std::map<std::string, double>& params) {
  if (name == "cd") {
    reject_unknown(params, {"p", "delta"}, name);
    return cd(get_or(params, "p", 0.0), get_or(params, "delta", 0.0));
  }
  if (name == "ad") {
    reject_unknown(params, {"p", "gamma"}, name);
    return ad(get(params, "p"), get(params, "gamma"));
  }
  if (name == "il") {
    reject_unknown(params, {"p"}, name);
    return il(get(params, "p"));
  }
  if (name == "il2") {
    reject_unknown(params, {"p", "rank", "dim"}, name);
    return il2(get(params, "p"), get_count(params, "rank", 1), get_count(params, "dim", 2));
  }
  if (name == "cl") {
    reject_unknown(params, {"delta"}, name);
    return cl(get(params, "delta"));
  }
  if (name == "rot") {
    reject_unknown(params, {"delta"}, name);
    return qubit_rotation(get(params, "delta"));
  }
  if (name == "cd2") {
    reject_unknown(params, {"p", "delta", "delta1", "delta2", "eps"}, name);
    const double delta = get_or(params, "delta", 0.0);
    return cd2(get_or(params, "p", 0.0), get_or(params, "delta1", delta),
               get_or(params, "delta2", delta), get_or(params, "eps", 0.0));
  }
  throw InvalidArgument("unknown model '" + name + "' (known: cd, ad, il, il2, cl, rot, cd2)");
}

Channel fidelity_map(const ModelSpec& m, bool full_space) {
  if (full_space || m.fidelity_subspace.empty()) return m.channel;
  return channel::compress_to_subspace(
      m.channel, channel::coordinate_isometry(m.channel.dim(), m.fidelity_subspace));
}

ComplexMatrix random_unitary(Index d, std::uint64_t seed) {
  rng::CounterRng g(rng::derive_key(seed, 0x55));
  return haar_isometry(d, d, g);
}

Channel random_cptp(Index d, Index kraus_rank, std::uint64_t seed) {
  if (d < 1 || kraus_rank < 1) throw InvalidArgument("random_cptp: d and rank must be positive");
  rng::CounterRng g(rng::derive_key(seed, 0x43));
  return Channel::from_kraus(slice(haar_isometry(d * kraus_rank, d, g), d, kraus_rank));
}

Channel random_mixed_unitary(Index d, Index k, std::uint64_t seed) {
  if (d < 1 || k < 1) throw InvalidArgument("random_mixed_unitary: d and k must be positive");
  rng::CounterRng g(rng::derive_key(seed, 0x4d));
  std::vector<double> weights(static_cast<std::size_t>(k));
  double total = 0.0;
  for (auto& w : weights) total += (w = -std::log(g.uniform()));
  std::vector<ComplexMatrix> kraus;
  for (Index i = 0; i < k; ++i)
    kraus.push_back(std::sqrt(weights[static_cast<std::size_t>(i)] / total) * haar_isometry(d, d, g));
  return Channel::from_kraus(kraus);
}

Channel random_trace_nonincreasing(Index d, Index kraus_rank, std::uint64_t seed) {
  const Channel base = random_cptp(d, kraus_rank, seed);
  rng::CounterRng g(rng::derive_key(seed, 0x54));
  const ComplexMatrix a = g.complex_gaussian(d, d);
  const double norm = linalg::operator_norm(linalg::HermitianMatrix::symmetrized(a.adjoint() * a));
  const ComplexMatrix contraction = a * (std::sqrt(g.uniform() / norm));
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : base.kraus()) kraus.push_back(k * contraction);
  return Channel::from_kraus(kraus);
}

Channel depolarizing(Index d, double q) {
  require_range(q, 0.0, 1.0, "depolarizing: q");
  const double dd = static_cast<double>(d);
  ComplexMatrix shift = ComplexMatrix::Zero(d, d), clock = ComplexMatrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) {
    shift((k + 1) % d, k) = 1.0;
    clock(k, k) = std::polar(1.0, 2.0 * pi * static_cast<double>(k) / dd);
  }
  std::vector<ComplexMatrix> kraus;
  ComplexMatrix xa = ComplexMatrix::Identity(d, d);
  for (Index a = 0; a < d; ++a) {
    ComplexMatrix w = xa;
    for (Index b = 0; b < d; ++b) {
      const double weight = (a == 0 && b == 0) ? 1.0 - q + q / (dd * dd) : q / (dd * dd);
      kraus.push_back(std::sqrt(weight) * w);
      w = w * clock;
    }
    xa = shift * xa;
  }
  return Channel::from_kraus(kraus);
}

}  // namespace diamondlab::models
