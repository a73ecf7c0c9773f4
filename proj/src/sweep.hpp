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

// Two-dimensional parameter sweeps over a named model, emitted as CSV.

#include <map>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace diamondlab::sweep {

enum class Scale { Linear, Log };

struct Axis {
  std::string param;
  double min = 0.0;
  double max = 0.0;
  int steps = 2;
  Scale scale = Scale::Linear;

  /// Grid values; log axes are evenly spaced in log10. Throws InvalidArgument
  /// when steps < 2 or a log axis has min <= 0.
  std::vector<double> values() const;
};

enum class Evaluator { ClosedForm, Sdp };

struct SweepConfig {
  std::string model;
  std::map<std::string, double> fixed;
  Axis axis1;
  Axis axis2;
  /// Column selection; empty means every column.
  std::vector<std::string> outputs;
  Evaluator evaluator = Evaluator::ClosedForm;
  unsigned threads = 1;
  double tolerance = 1e-7;
};

struct SweepTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a column by name; throws InvalidArgument if absent.
  std::size_t column(const std::string& name) const;
};

/// Columns available besides the two axis parameters.
const std::vector<std::string>& metric_columns();

/// One row per grid point in row-major order (axis1 outer). Points are
/// evaluated on up to `threads` workers; the output does not depend on it.
SweepTable run(const SweepConfig& config);

/// Comma separated, 17 significant digits, header row, LF line endings.
std::string to_csv(const SweepTable& table);

/// CD model, p and delta on a 41 x 41 log grid from 1e-6 to 1e-1.
SweepConfig fig1_config();
/// AD model, p in {0.5, 0.75, 1} against 20 log-spaced gamma values, SDP.
SweepConfig fig2_config();

SweepConfig config_from_json(const json_io::Json& j);
json_io::Json config_to_json(const SweepConfig& c);

/// Worker count: DIAMONDLAB_THREADS if set to a positive integer, else the
/// hardware concurrency, never more than `requested` when that is nonzero.
unsigned resolve_threads(unsigned requested);

}  // namespace diamondlab::sweep
