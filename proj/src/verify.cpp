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

#include "verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bounds.hpp"
#include "diamond.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "models.hpp"
#include "parallel.hpp"
#include "rng.hpp"
#include "sweep.hpp"

namespace diamondlab::verify {

namespace {

using models::ModelSpec;
constexpr double pi = std::numbers::pi;

class Ledger {
 public:
  Ledger(VerifyReport& report, double scale) : report_(report), scale_(scale) {}

  void near(const std::string& module, const std::string& property, const std::string& inputs, double observed,
            double expected, double tol) {
    record(module, property, inputs, std::abs(observed - expected) <= tol * scale_, observed, expected);
  }
  void at_most(const std::string& module, const std::string& property, const std::string& inputs,
               double observed, double upper, double tol) {
    record(module, property, inputs, observed <= upper + tol * scale_, observed, upper);
  }
  void at_least(const std::string& module, const std::string& property, const std::string& inputs,
                double observed, double lower, double tol) {
    record(module, property, inputs, observed >= lower - tol * scale_, observed, lower);
  }
  void certified(const std::string& module, const std::string& inputs, const diamond::DiamondResult& res) {
    at_most(module, "primal certificate residual", inputs, res.primal.max_residual(), 0.0,
            diamond::kCertificateTolerance);
    at_most(module, "dual certificate residual", inputs, res.dual.max_residual(), 0.0,
            diamond::kCertificateTolerance);
    at_most(module, "weak duality", inputs, res.primal_value, res.dual_value, 1e-12);
  }

 private:
  void record(const std::string& module, const std::string& property, const std::string& inputs, bool passed,
              double observed, double bound) {
    ++report_.checks;
    if (!passed || !std::isfinite(observed)) report_.violations.push_back({module, property, inputs, observed, bound});
  }

  VerifyReport& report_;
  double scale_;
};

std::string describe(const ModelSpec& m) {
  std::ostringstream os;
  os.precision(6);
  os << models::to_string(m.name) << '(';
  for (std::size_t i = 0; i < m.params.size(); ++i) os << (i ? ", " : "") << m.params[i].first << '=' << m.params[i].second;
  os << ')';
  return os.str();
}

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

double sdp_value(const channel::Channel& c, Ledger& ledger, const std::string& inputs) {
  const diamond::DiamondResult res = diamond::diamond_distance(c);
  ledger.certified("diamond", inputs, res);
  return res.value();
}

void golden_models(Ledger& L, unsigned threads) {
  std::vector<ModelSpec> specs;
  for (double p : grid(0, 1, 5))
    for (double delta : grid(-pi / 2, pi / 2, 5)) specs.push_back(models::cd(p, delta));
  for (double p : grid(0, 1, 5))
    for (double gamma : grid(0, 1, 5)) specs.push_back(models::ad(p, gamma));
  for (double p : grid(0, 1, 5)) {
    specs.push_back(models::il(p));
    specs.push_back(models::il2(p, 2, 3));
    specs.push_back(models::il2(p, 1, 2));
  }
  for (double delta : grid(-pi, pi, 5)) specs.push_back(models::cl(delta));
  for (double delta : {0.05, 0.4, 1.3}) specs.push_back(models::qubit_rotation(delta));

  struct Row {
    double r = 0, u = 0, d = 0;
    diamond::DiamondResult res;
  };
  std::vector<Row> rows(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t i) {
    const channel::Channel fid = models::fidelity_map(specs[i]);
    rows[i].r = metrics::avg_error_rate(fid);
    rows[i].u = metrics::unitarity(fid);
    rows[i].res = diamond::diamond_distance(specs[i].channel);
    rows[i].d = rows[i].res.value();
  });
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const ModelSpec& m = specs[i];
    const Row& row = rows[i];
    const std::string in = describe(m);
    L.certified("diamond", in, row.res);
    if (m.closed_forms.r) L.near("models", "closed-form r", in, row.r, *m.closed_forms.r, 1e-10);
    if (m.closed_forms.u) L.near("models", "closed-form u", in, row.u, *m.closed_forms.u, 1e-10);
    if (m.closed_forms.d_exact) L.near("models", "closed-form D", in, row.d, *m.closed_forms.d_exact, 1e-6);
    if (m.closed_forms.d_upper) L.at_most("models", "D upper bound", in, row.d, *m.closed_forms.d_upper, 1e-7);
    if (m.closed_forms.d_lower) L.at_least("models", "D lower bound", in, row.d, *m.closed_forms.d_lower, 1e-7);
    if (m.name == models::ModelName::AD) {
      const double p = m.params[0].second, gamma = m.params[1].second;
      L.at_most("diamond", "analytic AD certificate residual", in, diamond::ad_dual_certificate(p, gamma).max_residual(),
                0.0, 1e-10);
      if (p == 0.5) L.near("models", "D = 1.5 r at infinite temperature", in, row.d, 1.5 * row.r, 1e-6);
    }
    if (m.name == models::ModelName::IL2) L.near("models", "D = p", in, row.d, m.params[0].second, 1e-6);
  }
}

void golden_properties(Ledger& L, unsigned threads) {
  for (double p : {0.0, 0.01, 0.2, 0.5}) {
    const double ref = metrics::unitarity(models::cd(p, 0.0).channel);
    for (double delta : {0.01, 0.3, 1.2}) {
      std::ostringstream in;
      in << "cd(p=" << p << ", delta=" << delta << ")";
      L.near("models", "CD unitarity independent of delta", in.str(), metrics::unitarity(models::cd(p, delta).channel),
             ref, 1e-10);
    }
  }

  std::vector<double> il_ps{0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
  std::vector<double> il_d(il_ps.size());
  std::vector<diamond::Certificate> il_cert(il_ps.size());
  parallel_for(il_ps.size(), threads, [&](std::size_t i) {
    il_d[i] = diamond::diamond_distance(models::il(il_ps[i]).channel).value();
    il_cert[i] = diamond::il_dual_certificate(il_ps[i]);
  });
  for (std::size_t i = 0; i < il_ps.size(); ++i) {
    const std::string in = describe(models::il(il_ps[i]));
    L.at_most("models", "D <= 2 r for incoherent leakage", in, il_d[i], 2 * models::il_error_rate(il_ps[i]), 1e-7);
    L.at_most("diamond", "analytic IL certificate residual", in, il_cert[i].max_residual(), 0.0, 1e-10);
    L.at_least("diamond", "analytic IL certificate bounds SDP", in, il_cert[i].objective, il_d[i], 1e-7);
  }

  for (double delta : {0.001, 0.01, 0.1, 0.5}) {
    const ModelSpec m = models::cd(0.0, delta);
    const double r = metrics::avg_error_rate(m.channel);
    const double d = sdp_value(m.channel, L, describe(m));
    const bounds::BoundReport w = bounds::wallman_bounds(r, 2);
    L.at_least("bounds", "Wallman lower edge", describe(m), d, w.lower, 1e-7);
    L.at_most("bounds", "Wallman upper edge", describe(m), d, w.upper, 1e-7);
    L.near("bounds", "unitary lower edge exact for qubits", describe(m), d, bounds::unitary_bounds(r, 2).lower, 1e-6);
  }

  for (double p : {1e-2, 1e-3, 1e-4}) {
    auto ratio = [&](double delta) { return models::cd_diamond(p, delta) / models::cd_error_rate(p, delta); };
    std::ostringstream in;
    in << "p=" << p;
    L.at_least("bounds", "D/r grows once delta exceeds p", in.str(), ratio(2 * p), ratio(p / 2), 0.0);
    L.near("bounds", "dephasing classified favorable", in.str(),
           bounds::scaling_witness(models::cd_unitarity(p), models::cd_error_rate(p, 0), 2).regime ==
                   bounds::Regime::Favorable ? 1.0 : 0.0,
           1.0, 0.0);
    const double r_rot = models::cd_error_rate(0, 10 * p);
    L.near("bounds", "rotation classified coherent-dominated", in.str(),
           bounds::scaling_witness(1.0, r_rot, 2).regime == bounds::Regime::CoherentDominated ? 1.0 : 0.0, 1.0, 0.0);
  }

  for (const ModelSpec& m : {models::cd(0.1, 0.2), models::ad(0.7, 0.3), models::il(0.3), models::cd2(0.1, 0.2, 0.2, 0.05)})
    L.near("metrics", "Choi Frobenius identity", describe(m), metrics::choi_hs_identity_check(m.channel), 0.0, 1e-10);

  const auto fig1 = sweep::run(sweep::fig1_config());
  const std::size_t ci = fig1.column("D_over_r"), cp = fig1.column("p"), cd = fig1.column("delta");
  double worst = 0.0;
  for (const auto& row : fig1.rows)
    if (row[cp] >= 10 * row[cd]) worst = std::max(worst, row[ci]);
  L.at_most("cli", "Fig. 1 D/r when dephasing dominates", "p >= 10 delta", worst, 1.6, 0.0);
}

void audit(VerifyReport& report, Ledger& L, const VerifyOptions& opts) {
  {
    double dev = 0.0;
    for (double delta : grid(-pi, pi, 41)) {
      const ModelSpec m = models::cl(delta);
      const double c = std::cos(delta);
      const double f = metrics::avg_fidelity(models::fidelity_map(m));
      dev = std::max(dev, std::abs(f - (1 + c + c * c) / 3));
      L.near("models", "CL fidelity is the supplementary form", describe(m), f, (1 + c + c * c) / 3, 1e-12);
    }
    const ModelSpec m = models::cl(0.5);
    const metrics::Estimate est = metrics::avg_fidelity_haar_mc(models::fidelity_map(m), {20000, opts.seed, 1});
    const double supp = 1.0 - models::cl_error_rate(0.5);
    L.near("models", "CL fidelity by Haar sampling", describe(m), est.value, supp, 4 * est.std_error);
    const double c0 = 1.0;
    const double main_text_at_zero = (1 - c0 - c0 * c0) / 3;
    std::ostringstream detail;
    detail.precision(6);
    detail << "pipeline vs (2 - cos - cos^2)/3 max deviation " << dev << " over 41 angles; Haar MC at delta=0.5 "
           << est.value << " +- " << est.std_error << " vs " << supp << "; variant (1 - cos - cos^2)/3 gives "
           << main_text_at_zero << " at delta=0 and is rejected";
    report.audit.push_back({"r_CL", "supplementary formula confirmed", detail.str(), dev});
  }
  {
    double resolved = 0.0;
    for (std::uint64_t s = 1; s <= 6; ++s)
      for (linalg::Index d : {2, 3, 4})
        resolved = std::max(resolved, metrics::choi_hs_identity_check(models::random_cptp(d, 3, s)));
    const double printed =
        metrics::choi_hs_identity(channel::identity(2), metrics::ChoiIdentityForm::Printed).residual;
    std::ostringstream detail;
    detail << "||J||^2 = (d^2-1) u + ||e_nu||^2 + ||e_sdl||^2 + t^2 holds to " << resolved
           << " on random channels; the (d^2+1) u + ... + t form leaves residual " << printed << " on the identity";
    L.at_most("metrics", "resolved Choi identity", "random CPTP d=2,3,4", resolved, 0.0, 1e-10);
    report.audit.push_back({"choi_identity_coefficient", "resolved to (d^2-1)", detail.str(), resolved});
  }
  {
    double dev_r = 0.0, dev_u = 0.0;
    for (double p : {0.0, 0.05, 0.2})
      for (double delta : {0.0, 0.02, 0.3})
        for (double eps : {0.0, 0.005, 0.1}) {
          const ModelSpec m = models::cd2(p, delta, delta, eps);
          dev_r = std::max(dev_r, std::abs(metrics::avg_error_rate(m.channel) - models::cd2_error_rate(p, delta, eps)));
          dev_u = std::max(dev_u, std::abs(metrics::unitarity(m.channel) - models::cd2_unitarity(p)));
        }
    const bool agree = dev_r <= 1e-10 && dev_u <= 1e-10;
    std::ostringstream detail;
    detail << "3x3x3 grid over (p, delta, eps): max |r - r_formula| = " << dev_r << ", max |u - u_formula| = " << dev_u;
    report.audit.push_back({"cd2_appendix", agree ? "agree" : "disagree", detail.str(), std::max(dev_r, dev_u)});
  }
}

struct FuzzRow {
  std::string inputs;
  int d = 2;
  bool unital_tp = true;
  bool tp = true;
  double r = 0, u = 0, t = 1, value = 0;
  diamond::DiamondResult res;
  bool has_sdp = true;
};

void fuzz(Ledger& L, const VerifyOptions& opts, unsigned threads) {
  const std::size_t n = opts.samples;
  const std::size_t n3 = std::max<std::size_t>(1, n / 5);
  enum Kind { Mixed2, Mixed3, Cptp2, Lossy, Unitary3 };
  std::vector<std::pair<Kind, std::size_t>> jobs;
  for (std::size_t i = 0; i < n; ++i) jobs.push_back({Mixed2, i});
  for (std::size_t i = 0; i < n3; ++i) jobs.push_back({Mixed3, i});
  for (std::size_t i = 0; i < n; ++i) jobs.push_back({Cptp2, i});
  for (std::size_t i = 0; i < n; ++i) jobs.push_back({Lossy, i});
  for (std::size_t i = 0; i < n3; ++i) jobs.push_back({Unitary3, i});

  std::vector<FuzzRow> rows(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t j) {
    const auto [kind, i] = jobs[j];
    const std::uint64_t seed = rng::derive_key(rng::derive_key(opts.seed, static_cast<std::uint64_t>(kind)), i);
    FuzzRow& row = rows[j];
    std::ostringstream in;
    in << "seed=" << opts.seed << " sample=" << i;
    channel::Channel c = channel::identity(2);
    switch (kind) {
      case Mixed2:
        c = models::random_mixed_unitary(2, 1 + i % 4, seed);
        in << " mixed-unitary d=2";
        break;
      case Mixed3:
        c = models::random_mixed_unitary(3, 1 + i % 4, seed);
        in << " mixed-unitary d=3";
        break;
      case Cptp2:
        c = models::random_cptp(2, 1 + i % 4, seed);
        in << " cptp d=2";
        break;
      case Lossy:
        c = models::random_trace_nonincreasing(2 + i % 2, 2, seed);
        in << " trace-nonincreasing d=" << c.dim();
        row.has_sdp = false;
        break;
      case Unitary3: {
        const auto u = models::random_unitary(3, seed);
        c = channel::unitary(u);
        in << " unitary d=3";
        row.has_sdp = false;
        row.value = diamond::unitary_diamond(u);
        break;
      }
    }
    row.inputs = in.str();
    row.d = static_cast<int>(c.dim());
    row.tp = c.trace_preserving();
    row.unital_tp = c.unital() && c.trace_preserving();
    row.r = metrics::avg_error_rate(c);
    row.u = metrics::unitarity(c);
    row.t = c.identity_image_trace() / c.dim();
    if (row.has_sdp) {
      row.res = diamond::diamond_distance(c);
      row.value = row.res.value();
    }
  });

  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const FuzzRow& row = rows[j];
    const Kind kind = jobs[j].first;
    L.at_least("bounds", "unitarity floor", row.inputs, row.u, bounds::unitarity_floor(row.r, row.d, row.t), 1e-12);
    if (row.has_sdp) {
      L.certified("diamond", row.inputs, row.res);
      const bounds::BoundReport w = bounds::wallman_bounds(row.r, row.d);
      L.at_least("bounds", "Wallman lower edge", row.inputs, row.value, w.lower, 1e-7);
      L.at_most("bounds", "Wallman upper edge", row.inputs, row.value, w.upper, 1e-7);
      if (row.unital_tp) {
        const bounds::BoundReport s = bounds::unitarity_sandwich(row.u, row.r, row.d);
        L.near("bounds", "sandwich defined", row.inputs, s.consistent ? 1.0 : 0.0, 1.0, 0.0);
        L.at_least("bounds", "unitarity sandwich lower edge", row.inputs, row.value, s.lower, 1e-7);
        L.at_most("bounds", "unitarity sandwich upper edge", row.inputs, row.value, s.upper, 1e-7);
      }
    }
    if (kind == Unitary3) {
      const bounds::BoundReport b = bounds::unitary_bounds(row.r, row.d);
      L.at_least("bounds", "unitary lower edge", row.inputs, row.value, b.lower, 1e-9);
      L.at_most("bounds", "unitary upper edge", row.inputs, row.value, b.upper, 1e-9);
      L.near("metrics", "unitary channels have u = 1", row.inputs, row.u, 1.0, 1e-10);
    }
  }
}

}  // namespace

Suite suite_from_string(const std::string& name) {
  if (name == "golden") return Suite::Golden;
  if (name == "fuzz") return Suite::Fuzz;
  if (name == "all") return Suite::All;
  throw InvalidArgument("unknown suite '" + name + "' (known: golden, fuzz, all)");
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Golden: return "golden";
    case Suite::Fuzz: return "fuzz";
    case Suite::All: return "all";
  }
  return "unknown";
}

VerifyReport run(const VerifyOptions& opts) {
  if (!(opts.tolerance_scale > 0.0) || !std::isfinite(opts.tolerance_scale))
    throw InvalidArgument("verify: tolerance scale must be positive and finite");
  if (opts.suite != Suite::Golden && opts.samples == 0) throw InvalidArgument("verify: samples must be positive");
  VerifyReport report;
  Ledger ledger(report, opts.tolerance_scale);
  const unsigned threads = sweep::resolve_threads(opts.threads);
  if (opts.suite != Suite::Fuzz) {
    golden_models(ledger, threads);
    golden_properties(ledger, threads);
    audit(report, ledger, opts);
  }
  if (opts.suite != Suite::Golden) fuzz(ledger, opts, threads);
  return report;
}

json_io::Json to_json(const VerifyReport& report, const VerifyOptions& opts) {
  json_io::Json violations = json_io::Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"module", v.module},
                          {"property", v.property},
                          {"inputs", v.inputs},
                          {"observed", v.observed},
                          {"bound", v.bound}});
  json_io::Json audit = json_io::Json::array();
  for (const auto& a : report.audit)
    audit.push_back({{"item", a.item}, {"status", a.status}, {"detail", a.detail}, {"deviation", a.deviation}});
  return json_io::Json{{"suite", to_string(opts.suite)},
                       {"samples", opts.samples},
                       {"seed", opts.seed},
                       {"tolerance_scale", opts.tolerance_scale},
                       {"checks", report.checks},
                       {"passed", report.ok()},
                       {"violations", violations},
                       {"audit", audit}};
}

}  // namespace diamondlab::verify
