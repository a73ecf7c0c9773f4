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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "bounds.hpp"
#include "diamond.hpp"

namespace diamondlab::report {

namespace {

Json bound_to_json(const bounds::BoundReport& b) {
  Json j{{"name", b.name},     {"lower", b.lower},       {"upper", b.upper}, {"satisfied", b.satisfied},
         {"slack", b.slack},   {"consistent", b.consistent}, {"source", "bound"}};
  j["observed"] = b.observed ? Json(*b.observed) : Json(nullptr);
  return j;
}

Json residuals_to_json(const diamond::Certificate& c) {
  Json j = Json::object();
  for (const auto& r : c.residuals) j[r.name] = r.value;
  return j;
}

Json estimate_to_json(const metrics::Estimate& e) {
  return Json{{"value", e.value}, {"std_error", e.std_error}, {"samples", e.samples}};
}

Json build(const channel::Channel& full, const channel::Channel& fidelity, const models::ClosedForms* forms,
           const MetricsOptions& opts) {
  const int d = static_cast<int>(fidelity.dim());
  const metrics::MetricReport rep = metrics::report(fidelity);
  Json out;
  Json warnings = Json::array();
  out["dim"] = full.dim();
  out["fidelity_dim"] = fidelity.dim();
  out["trace_preserving"] = full.trace_preserving();
  out["unital"] = full.unital();

  Json r{{"pipeline", rep.r}};
  Json f{{"pipeline", rep.f_avg}};
  Json u{{"pipeline", rep.u}};
  Json dd = Json::object();
  if (forms) {
    if (forms->r) r["closed-form"] = *forms->r;
    if (forms->u) u["closed-form"] = *forms->u;
    Json cf = Json::object();
    if (forms->d_exact) cf["exact"] = *forms->d_exact;
    if (forms->d_lower) cf["lower"] = *forms->d_lower;
    if (forms->d_upper) cf["upper"] = *forms->d_upper;
    if (!cf.empty()) dd["closed-form"] = cf;
    if (forms->provisional) warnings.push_back("closed forms for this model are provisional");
  }
  if (opts.monte_carlo) {
    f["mc"] = estimate_to_json(metrics::avg_fidelity_haar_mc(fidelity, opts.mc));
    u["mc"] = estimate_to_json(metrics::unitarity_haar_mc(fidelity, opts.mc));
  }

  std::optional<double> observed;
  Json bound_list = Json::array();
  if (opts.sdp) {
    const diamond::DiamondResult res = diamond::diamond_distance(full, opts.tolerance);
    observed = res.value();
    dd["sdp"] = Json{{"value", res.value()},
                     {"lower", res.primal_value},
                     {"upper", res.dual_value},
                     {"gap", res.gap},
                     {"iterations", res.iterations},
                     {"status", diamond::to_string(res.status)}};
    out["certificates"] = Json{{"primal", residuals_to_json(res.primal)}, {"dual", residuals_to_json(res.dual)}};
    for (const auto& w : res.warnings) warnings.push_back(w);
  }
  const double rr = rep.r;
  auto add = [&](bounds::BoundReport b) {
    if (observed) b = bounds::observe(b, *observed);
    bound_list.push_back(bound_to_json(b));
  };
  add(bounds::wallman_bounds(rr, d));
  add(bounds::unitarity_sandwich(rep.u, rr, d));
  if (std::abs(rep.u - 1.0) < 1e-10 && full.kraus().size() == 1) add(bounds::unitary_bounds(rr, d));
  if (!(full.unital() && full.trace_preserving()))
    warnings.push_back("unitarity sandwich applied outside its hypothesis class (channel is not unital and trace preserving)");
  if (full.dim() != fidelity.dim())
    warnings.push_back("r and u refer to the computational subspace; D refers to the full space");

  const bounds::ScalingWitness w = bounds::scaling_witness(rep.u, rr, d, opts.kappa);
  out["witness"] = Json{{"excess", w.excess},
                        {"kappa", w.kappa},
                        {"regime", bounds::to_string(w.regime)},
                        {"below_floor", w.below_floor},
                        {"floor", bounds::unitarity_floor(rr, d)},
                        {"source", "bound"}};
  out["r"] = r;
  out["f_avg"] = f;
  out["u"] = u;
  out["D"] = dd;
  if (observed && rr > 0.0) out["D_over_r"] = Json{{"sdp", *observed / rr}};
  out["bounds"] = bound_list;
  out["warnings"] = warnings;
  return out;
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const Json& item = j[i];
      const std::string key = item.is_object() && item.contains("name") ? item["name"].get<std::string>() : std::to_string(i);
      flatten(item, prefix + "." + key, rows);
    }
  } else if (j.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", j.get<double>());
    rows.emplace_back(prefix, buf);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

}  // namespace

Json model_to_json(const models::ModelSpec& m) {
  Json params = Json::object();
  for (const auto& [k, v] : m.params) params[k] = v;
  return Json{{"name", models::to_string(m.name)}, {"params", params}};
}

Json metrics_report(const models::ModelSpec& m, const MetricsOptions& opts) {
  const channel::Channel fid = models::fidelity_map(m, opts.full_space);
  const bool use_forms = !opts.full_space || m.fidelity_subspace.empty();
  Json out = build(m.channel, fid, use_forms ? &m.closed_forms : nullptr, opts);
  out["model"] = model_to_json(m);
  return out;
}

Json metrics_report(const channel::Channel& c, const MetricsOptions& opts) {
  Json out = build(c, c, nullptr, opts);
  out["model"] = Json{{"name", "kraus"}, {"params", Json::object()}};
  return out;
}

std::string render_table(const Json& report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

}  // namespace diamondlab::report
