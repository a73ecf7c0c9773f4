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

#include "sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "bounds.hpp"
#include "diamond.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "models.hpp"
#include "parallel.hpp"

namespace diamondlab::sweep {

namespace {

const char* to_string(Scale s) { return s == Scale::Log ? "log" : "linear"; }

Scale scale_from(const std::string& s) {
  if (s == "log") return Scale::Log;
  if (s == "linear") return Scale::Linear;
  throw InvalidArgument("sweep: scale must be 'linear' or 'log', got '" + s + "'");
}

std::vector<double> evaluate(const SweepConfig& cfg, double a, double b) {
  std::map<std::string, double> params = cfg.fixed;
  params[cfg.axis1.param] = a;
  params[cfg.axis2.param] = b;
  const models::ModelSpec m = models::make_model(cfg.model, params);
  const int d = static_cast<int>(models::fidelity_map(m).dim());
  double r, u, dist;
  if (cfg.evaluator == Evaluator::ClosedForm) {
    if (!m.closed_forms.d_exact)
      throw InvalidArgument("sweep: model '" + cfg.model + "' has no closed-form D; use the SDP evaluator");
    r = m.closed_forms.r ? *m.closed_forms.r : metrics::avg_error_rate(models::fidelity_map(m));
    u = m.closed_forms.u ? *m.closed_forms.u : metrics::unitarity(models::fidelity_map(m));
    dist = *m.closed_forms.d_exact;
  } else {
    const channel::Channel fid = models::fidelity_map(m);
    r = metrics::avg_error_rate(fid);
    u = metrics::unitarity(fid);
    dist = diamond::diamond_distance(m.channel, cfg.tolerance).value();
  }
  const bounds::BoundReport w = bounds::wallman_bounds(r, d);
  const bounds::BoundReport s = bounds::unitarity_sandwich(u, r, d);
  return {a, b, r, u, dist, r > 0.0 ? dist / r : std::nan(""), w.lower, w.upper, s.lower, s.upper};
}

}  // namespace

std::vector<double> Axis::values() const {
  if (steps < 2) throw InvalidArgument("sweep: axis '" + param + "' needs at least 2 steps");
  if (!std::isfinite(min) || !std::isfinite(max)) throw InvalidArgument("sweep: axis bounds must be finite");
  if (scale == Scale::Log && !(min > 0.0 && max > 0.0))
    throw InvalidArgument("sweep: log axis '" + param + "' requires positive bounds");
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) / (steps - 1);
    out[i] = scale == Scale::Log ? std::pow(10.0, std::log10(min) + t * (std::log10(max) - std::log10(min)))
                                 : min + t * (max - min);
  }
  out.front() = min;
  out.back() = max;
  return out;
}

std::size_t SweepTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw InvalidArgument("sweep: no column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

const std::vector<std::string>& metric_columns() {
  static const std::vector<std::string> cols{"r",             "u",             "D",
                                             "D_over_r",      "wallman_lower", "wallman_upper",
                                             "sandwich_lower", "sandwich_upper"};
  return cols;
}

SweepTable run(const SweepConfig& cfg) {
  if (cfg.axis1.param == cfg.axis2.param) throw InvalidArgument("sweep: the two axes must vary different parameters");
  const std::vector<double> xs = cfg.axis1.values();
  const std::vector<double> ys = cfg.axis2.values();
  std::vector<std::string> all{cfg.axis1.param, cfg.axis2.param};
  all.insert(all.end(), metric_columns().begin(), metric_columns().end());
  std::vector<std::size_t> keep;
  if (cfg.outputs.empty()) {
    for (std::size_t i = 0; i < all.size(); ++i) keep.push_back(i);
  } else {
    keep = {0, 1};
    for (const auto& name : cfg.outputs) {
      const auto it = std::find(all.begin() + 2, all.end(), name);
      if (it == all.end()) throw InvalidArgument("sweep: unknown output column '" + name + "'");
      keep.push_back(static_cast<std::size_t>(it - all.begin()));
    }
  }
  // Fail fast on invalid models before spawning workers.
  evaluate(cfg, xs.front(), ys.front());

  const std::size_t total = xs.size() * ys.size();
  std::vector<std::vector<double>> full(total);
  parallel_for(total, resolve_threads(cfg.threads),
               [&](std::size_t i) { full[i] = evaluate(cfg, xs[i / ys.size()], ys[i % ys.size()]); });

  SweepTable table;
  for (std::size_t k : keep) table.header.push_back(all[k]);
  table.rows.reserve(total);
  for (const auto& row : full) {
    std::vector<double> out;
    for (std::size_t k : keep) out.push_back(row[k]);
    table.rows.push_back(std::move(out));
  }
  return table;
}

std::string to_csv(const SweepTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) out += (i ? "," : "") + table.header[i];
  out += '\n';
  char buf[40];
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      if (i) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

SweepConfig fig1_config() {
  SweepConfig c;
  c.model = "cd";
  c.axis1 = {"p", 1e-6, 1e-1, 41, Scale::Log};
  c.axis2 = {"delta", 1e-6, 1e-1, 41, Scale::Log};
  c.evaluator = Evaluator::ClosedForm;
  return c;
}

SweepConfig fig2_config() {
  SweepConfig c;
  c.model = "ad";
  c.axis1 = {"p", 0.5, 1.0, 3, Scale::Linear};
  c.axis2 = {"gamma", 1e-4, 0.5, 20, Scale::Log};
  c.evaluator = Evaluator::Sdp;
  return c;
}

SweepConfig config_from_json(const json_io::Json& j) {
  auto axis = [](const json_io::Json& a, const char* which) {
    if (!a.is_object()) throw InvalidArgument(std::string("sweep config: ") + which + " must be an object");
    Axis out;
    out.param = a.at("param").get<std::string>();
    out.min = a.at("min").get<double>();
    out.max = a.at("max").get<double>();
    out.steps = a.at("steps").get<int>();
    out.scale = scale_from(a.value("scale", "linear"));
    return out;
  };
  try {
    SweepConfig c;
    c.model = j.at("model").get<std::string>();
    if (j.contains("fixed")) c.fixed = j["fixed"].get<std::map<std::string, double>>();
    c.axis1 = axis(j.at("axis1"), "axis1");
    c.axis2 = axis(j.at("axis2"), "axis2");
    if (j.contains("outputs")) c.outputs = j["outputs"].get<std::vector<std::string>>();
    const std::string ev = j.value("evaluator", "closed-form");
    if (ev == "sdp") c.evaluator = Evaluator::Sdp;
    else if (ev == "closed-form") c.evaluator = Evaluator::ClosedForm;
    else throw InvalidArgument("sweep config: evaluator must be 'closed-form' or 'sdp'");
    c.threads = j.value("threads", 0u);
    c.tolerance = j.value("tolerance", 1e-7);
    return c;
  } catch (const json_io::Json::exception& e) {
    throw InvalidArgument(std::string("sweep config: ") + e.what());
  }
}

json_io::Json config_to_json(const SweepConfig& c) {
  auto axis = [](const Axis& a) {
    return json_io::Json{{"param", a.param}, {"min", a.min}, {"max", a.max}, {"steps", a.steps},
                         {"scale", to_string(a.scale)}};
  };
  return json_io::Json{{"model", c.model},
                       {"fixed", c.fixed},
                       {"axis1", axis(c.axis1)},
                       {"axis2", axis(c.axis2)},
                       {"outputs", c.outputs},
                       {"evaluator", c.evaluator == Evaluator::Sdp ? "sdp" : "closed-form"},
                       {"threads", c.threads},
                       {"tolerance", c.tolerance}};
}

unsigned resolve_threads(unsigned requested) {
  unsigned cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DIAMONDLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) cap = static_cast<unsigned>(v);
  }
  return requested == 0 ? cap : std::min(requested, cap);
}

}  // namespace diamondlab::sweep
