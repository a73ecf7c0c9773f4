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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "certificate.hpp"
#include "certify.hpp"
#include "diamond.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "metrics.hpp"
#include "models.hpp"
#include "sweep.hpp"
#include "verify.hpp"

namespace dl = diamondlab;
using dl::json_io::Json;

namespace {

constexpr double kTightTol = 1e-10;

struct Outcome {
  bool passed = true;
  std::string detail;
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double sdp(const dl::channel::Channel& c, double tol = kTightTol) {
  return dl::diamond::diamond_distance(c, tol).value();
}

double subspace_r(const dl::models::ModelSpec& m) {
  return dl::metrics::avg_error_rate(dl::models::fidelity_map(m));
}

Outcome cd_exactness() {
  const std::vector<double> vals{0, 1e-4, 1e-3, 1e-2, 0.1, 0.3};
  double worst_d = 0, worst_alt = 0, worst_r = 0;
  for (double p : vals)
    for (double delta : vals) {
      const auto m = dl::models::cd(p, delta);
      const double d = sdp(m.channel, 1e-7);
      const double exact =
          0.5 * std::abs(1.0 - (1.0 - 2.0 * p) * std::exp(std::complex<double>(0.0, 2.0 * delta)));
      const double r_formula = 2.0 / 3.0 * (p * std::cos(2 * delta) + std::pow(std::sin(delta), 2));
      const double alt = std::sqrt(std::max(0.0, 1.5 * r_formula - p * (1 - p)));
      worst_d = std::max(worst_d, std::abs(d - exact));
      worst_alt = std::max(worst_alt, std::abs(d - alt));
      worst_r = std::max(worst_r, std::abs(dl::metrics::avg_error_rate(m.channel) - r_formula));
    }
  return {worst_d <= 1e-6 && worst_alt <= 1e-6 && worst_r <= 1e-12,
          fmt("6x6 grid: max|D - closed| = %.2e, max|D - sqrt(3r/2 - p(1-p))| = %.2e, max|r - formula| = %.2e",
              worst_d, worst_alt, worst_r)};
}

Outcome dephasing_line() {
  double worst = 0;
  for (double p : {1e-4, 1e-3, 1e-2, 0.1, 0.3}) {
    const auto m = dl::models::cd(p, 0);
    worst = std::max(worst, std::abs(sdp(m.channel) - 1.5 * dl::metrics::avg_error_rate(m.channel)));
  }
  return {worst <= 1e-8, fmt("delta = 0: max|D - 1.5 r| = %.2e", worst)};
}

Outcome unitary_equality() {
  double worst = 0;
  for (double delta : {1e-4, 1e-3, 1e-2, 0.1, 0.3}) {
    const auto m = dl::models::cd(0, delta);
    worst = std::max(worst, std::abs(sdp(m.channel) - std::sqrt(1.5 * dl::metrics::avg_error_rate(m.channel))));
  }
  const auto m = dl::models::cd(0, std::asin(std::sqrt(1.5e-4)));
  const double r = dl::metrics::avg_error_rate(m.channel);
  const double d = sdp(m.channel);
  return {worst <= 1e-8 && std::abs(r - 1e-4) <= 1e-12 && d >= 0.01,
          fmt("p = 0: max|D - sqrt(3r/2)| = %.2e; at r = %.3g D = %.6f", worst, r, d)};
}

Outcome amplitude_damping() {
  double worst_bound = -1e300, worst_half = 0, min_ratio = 1e300, max_ratio = 0, worst_cert = 0;
  for (double p : {0.0, 0.25, 0.5, 0.75, 1.0})
    for (double gamma : {1e-4, 1e-3, 1e-2, 0.1, 0.5}) {
      const auto m = dl::models::ad(p, gamma);
      const double r = dl::metrics::avg_error_rate(m.channel);
      const double d = sdp(m.channel);
      worst_bound = std::max(worst_bound, d - 3 * r * std::max(p, 1 - p));
      if (p == 0.5) worst_half = std::max(worst_half, std::abs(d - 1.5 * r));
      if (p == 1.0 && gamma <= 1e-2) {
        min_ratio = std::min(min_ratio, d / r);
        max_ratio = std::max(max_ratio, d / r);
      }
      worst_cert = std::max(worst_cert, dl::diamond::ad_dual_certificate(p, gamma).max_residual());
    }
  const bool ok = worst_bound <= 1e-7 && worst_half <= 1e-6 && min_ratio >= 2.9 && max_ratio <= 3.0 &&
                  worst_cert <= 1e-10;
  return {ok, fmt("5x5 grid: max(D - 3r max(p,1-p)) = %.2e; p = 1/2 max|D - 1.5r| = %.2e; "
                  "p = 1 D/r in [%.6f, %.6f]; analytic certificate residual %.1e",
                  worst_bound, worst_half, min_ratio, max_ratio, worst_cert)};
}

Outcome leakage() {
  double il_excess = -1e300, il2_p = 0, il2_r = 0, il2_q = 0, cl_sin = 0, cl_band = -1e300;
  for (double p : {0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
    const auto il = dl::models::il(p);
    il_excess = std::max(il_excess, sdp(il.channel) - 2 * subspace_r(il));
    const auto a = dl::models::il2(p, 2, 3);
    const double da = sdp(a.channel);
    il2_p = std::max(il2_p, std::abs(da - p));
    il2_r = std::max(il2_r, std::abs(da - 2 * dl::metrics::avg_error_rate(a.channel)));
    const auto b = dl::models::il2(p, 1, 2);
    il2_q = std::max(il2_q, std::abs(sdp(b.channel) - 1.5 * dl::metrics::avg_error_rate(b.channel)));
  }
  for (double delta : {0.01, -0.01, 0.1, -0.1, 0.5, -0.5, 1.2, -1.2}) {
    const auto m = dl::models::cl(delta);
    const double d = sdp(m.channel);
    const double r = subspace_r(m);
    cl_sin = std::max(cl_sin, std::abs(d - std::abs(std::sin(delta))));
    cl_band = std::max({cl_band, std::sqrt(1.5 * r) - d, d - std::sqrt(2 * r)});
  }
  const bool ok = il_excess <= 1e-7 && il2_p <= 1e-6 && il2_r <= 1e-9 && il2_q <= 1e-9 && cl_sin <= 1e-6 &&
                  cl_band <= 1e-9;
  return {ok, fmt("IL max(D - 2r) = %.2e; IL2(2,3) max|D - p| = %.2e, max|D - 2r| = %.2e; "
                  "IL2(1,2) max|D - 1.5r| = %.2e; CL max|D - |sin|| = %.2e, band excess %.2e",
                  il_excess, il2_p, il2_r, il2_q, cl_sin, cl_band)};
}

Outcome sandwich_fuzz() {
  int violations = 0, channels = 0;
  double worst = -1e300;
  for (int d : {2, 3}) {
    const int n = d == 2 ? 500 : 100;
    for (int i = 0; i < n; ++i) {
      const auto c = dl::models::random_mixed_unitary(d, 1 + i % 4, 1000 * d + i);
      const double r = dl::metrics::avg_error_rate(c);
      const double u = dl::metrics::unitarity(c);
      const auto res = dl::diamond::diamond_distance(c);
      const double v = res.value();
      const auto band = dl::bounds::unitarity_sandwich(u, r, d);
      const auto wall = dl::bounds::wallman_bounds(r, d);
      const double excess = std::max({band.lower - v, v - band.upper, wall.lower - v, v - wall.upper});
      worst = std::max(worst, excess);
      const bool bad = excess > 1e-9 || u < dl::bounds::unitarity_floor(r, d) - 1e-12 ||
                       res.primal_value > res.dual_value + 1e-12 || !res.primal.feasible() ||
                       !res.dual.feasible();
      violations += bad;
      ++channels;
    }
  }
  return {violations == 0,
          fmt("%d mixed-unitary channels: %d violations, largest band excess %.2e", channels, violations, worst)};
}

Outcome monte_carlo() {
  int failures = 0;
  double worst_sigma = 0, max_se = 0;
  for (int d : {2, 3})
    for (std::uint64_t s = 1; s <= 10; ++s) {
      const auto c = dl::models::random_cptp(d, 2, 100 * d + s);
      const dl::metrics::MonteCarloOptions opts{100000, s, 1};
      const auto f = dl::metrics::avg_fidelity_haar_mc(c, opts);
      const auto u = dl::metrics::unitarity_haar_mc(c, opts);
      const double zf = std::abs(f.value - dl::metrics::avg_fidelity(c)) / f.std_error;
      const double zu = std::abs(u.value - dl::metrics::unitarity(c)) / u.std_error;
      worst_sigma = std::max({worst_sigma, zf, zu});
      max_se = std::max({max_se, f.std_error, u.std_error});
      failures += zf > 3 || zu > 3 || f.std_error >= 1e-3 || u.std_error >= 1e-3;
    }
  return {failures == 0, fmt("20 channels, n = 1e5: largest deviation %.2f std errors, largest std error %.2e",
                             worst_sigma, max_se)};
}

Outcome figures() {
  const auto fig1 = dl::sweep::run(dl::sweep::fig1_config());
  const auto p1 = fig1.column("p"), d1 = fig1.column("delta"), ratio = fig1.column("D_over_r");
  double max_p_dominant = 0, min_delta_dominant = 1e300;
  for (const auto& row : fig1.rows) {
    const double p = row[p1], delta = row[d1];
    if (p >= 10 * delta) max_p_dominant = std::max(max_p_dominant, row[ratio]);
    if (delta >= 10 * p && delta >= 1e-3) min_delta_dominant = std::min(min_delta_dominant, row[ratio]);
  }
  auto cfg2 = dl::sweep::fig2_config();
  cfg2.threads = dl::sweep::resolve_threads(0);
  const auto fig2 = dl::sweep::run(cfg2);
  const auto r2 = fig2.column("r"), dd = fig2.column("D");
  double excess = -1e300;
  for (const auto& row : fig2.rows)
    excess = std::max({excess, 1.5 * row[r2] - row[dd] - 1e-8, row[dd] - 3 * row[r2] - 1e-7});
  const bool ok = max_p_dominant <= 1.6 && min_delta_dominant >= 10 && excess <= 0;
  return {ok, fmt("fig1 max D/r (p >= 10 delta) = %.4f [<= 1.6], min D/r (delta >= 10p, delta >= 1e-3) = %.4f "
                  "[>= 10]; fig2 %zu points, largest excursion outside [1.5r, 3r] = %.2e",
                  max_p_dominant, min_delta_dominant, fig2.rows.size(), excess)};
}

Outcome audit() {
  dl::verify::VerifyOptions opts;
  opts.suite = dl::verify::Suite::Golden;
  const auto rep = dl::verify::run(opts);
  auto find = [&](const std::string& item) -> const dl::verify::AuditEntry* {
    for (const auto& a : rep.audit)
      if (a.item == item) return &a;
    return nullptr;
  };
  const auto* rcl = find("r_CL");
  const auto* choi = find("choi_identity_coefficient");
  const auto* cd2 = find("cd2_appendix");
  const bool ok = rep.ok() && rcl && rcl->deviation <= 1e-12 && choi && choi->deviation <= 1e-10 && cd2;
  return {ok, fmt("golden suite %zu checks, %zu violations; r_CL deviation %.1e; Choi identity residual %.1e; "
                  "cd2 %s",
                  rep.checks, rep.violations.size(), rcl ? rcl->deviation : -1.0, choi ? choi->deviation : -1.0,
                  cd2 ? cd2->status.c_str() : "missing")};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

Json& find_cert(Json& doc, const std::string& label) {
  for (auto& c : doc["certificates"])
    if (c["label"] == label) return c;
  throw dl::InvalidArgument("no certificate " + label);
}

Outcome certificates() {
  const auto path = std::filesystem::temp_directory_path() / "diamondlab_acceptance_cert.json";
  int round_trips = 0, accepted = 0, rejected = 0;
  for (const auto& m : {dl::models::cd(0.1, 0.05), dl::models::ad(1.0, 0.01), dl::models::il(0.2),
                        dl::models::il2(0.3, 2, 3)}) {
    const Json doc = dl::certify::certify_model(m);
    write_text(path, dl::json_io::dump(doc));
    ++round_trips;
    accepted += dl::certificate::check_file(path.string()).ok;

    Json tampered = dl::json_io::parse(dl::json_io::dump(doc), "certificate");
    Json& z = find_cert(tampered, "sdp_dual")["Z"];
    std::size_t best = 0;
    for (std::size_t i = 1; i < z.size(); ++i)
      if (z[i][i][0].get<double>() > z[best][best][0].get<double>()) best = i;
    z[best][best] = Json::array({0.0, 0.0});
    write_text(path, dl::json_io::dump(tampered));
    rejected += !dl::certificate::check_file(path.string()).ok;
  }
  std::filesystem::remove(path);
  return {accepted == round_trips && rejected == round_trips,
          fmt("%d models: %d round trips accepted, %d tampered files rejected", round_trips, accepted, rejected)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "coherent+dephasing exactness", cd_exactness},
      {2, "dephasing line D = 1.5 r", dephasing_line},
      {3, "unitary line D = sqrt(3r/2)", unitary_equality},
      {4, "amplitude damping", amplitude_damping},
      {5, "leakage models", leakage},
      {6, "bound fuzzing", sandwich_fuzz},
      {7, "Monte Carlo agreement", monte_carlo},
      {8, "figure reproduction", figures},
      {9, "formula audit", audit},
      {10, "certificate round trip", certificates},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2d  %-30s %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.passed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
