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

// Certificate files and a checker that re-verifies them from the stored
// matrices alone, without running any solver.
//
// File layout (keys sorted on output):
//   { "certificates": [ { "label", "kind", "dims": [dA, dB], "j_delta",
//                         "objective", "rho", "W" | "Z", "residuals" }, ... ],
//     "format": "diamondlab-certificate", "model": {...}, "version": 1 }

#include <string>
#include <utility>
#include <vector>

#include "diamond.hpp"
#include "json_io.hpp"

namespace diamondlab::certificate {

using json_io::Json;

inline constexpr const char* kFormat = "diamondlab-certificate";

struct Labeled {
  std::string label;
  diamond::Certificate cert;
};

Json to_json(const Labeled& c);
Json bundle(const Json& model, const std::vector<Labeled>& certs);

struct CheckItem {
  std::string certificate;
  std::string residual;
  double value = 0.0;
  bool passed = true;
};

struct CheckReport {
  bool ok = true;
  double tolerance = 0.0;
  std::vector<CheckItem> items;
  std::vector<std::string> violations;
};

/// Recomputes Hermiticity, the PSD constraints, the objective of every
/// certificate, and weak duality between every primal/dual pair that
/// certifies the same operator. A certificate fails if any recomputed
/// residual exceeds `tol`.
CheckReport check(const Json& doc, double tol = diamond::kCertificateTolerance);
CheckReport check_file(const std::string& path, double tol = diamond::kCertificateTolerance);

Json report_to_json(const CheckReport& r);

}  // namespace diamondlab::certificate
