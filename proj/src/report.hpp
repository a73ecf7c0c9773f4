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

#pragma once

// Per-channel metric reports. Every number is stored under the name of the
// procedure that produced it: "pipeline" (exact evaluation of the channel),
// "closed-form", "sdp", "bound", "certificate" or "mc" (value with std_error).

#include <optional>

#include "json_io.hpp"
#include "metrics.hpp"
#include "models.hpp"

namespace diamondlab::report {

using json_io::Json;

struct MetricsOptions {
  bool sdp = true;
  bool monte_carlo = false;
  metrics::MonteCarloOptions mc;
  double kappa = 10.0;
  double tolerance = 1e-7;
  /// Report leakage models over the full space instead of the computational subspace.
  bool full_space = false;
};

Json model_to_json(const models::ModelSpec& m);

Json metrics_report(const models::ModelSpec& m, const MetricsOptions& opts);
/// Report for a channel without a named model (for instance read from a Kraus file).
Json metrics_report(const channel::Channel& c, const MetricsOptions& opts);

/// Two-column text rendering of a report: one line per number with its source.
std::string render_table(const Json& report);

}  // namespace diamondlab::report
