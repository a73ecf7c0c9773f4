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

// Verification suites that evaluate every documented property of the
// library and collect violations into a ledger.

#include <cstdint>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace diamondlab::verify {

enum class Suite { Golden, Fuzz, All };
Suite suite_from_string(const std::string& name);
const char* to_string(Suite s);

struct VerifyOptions {
  Suite suite = Suite::All;
  std::size_t samples = 200;
  std::uint64_t seed = 7;
  /// Multiplies every tolerance. Values far below 1 demand more accuracy
  /// than floating point delivers and must produce violations.
  double tolerance_scale = 1.0;
  unsigned threads = 0;
};

struct Violation {
  std::string module;
  std::string property;
  std::string inputs;
  double observed = 0.0;
  double bound = 0.0;
};

struct AuditEntry {
  std::string item;
  std::string status;
  std::string detail;
  double deviation = 0.0;
};

struct VerifyReport {
  std::size_t checks = 0;
  std::vector<Violation> violations;
  std::vector<AuditEntry> audit;

  bool ok() const { return violations.empty(); }
};

VerifyReport run(const VerifyOptions& opts);

json_io::Json to_json(const VerifyReport& report, const VerifyOptions& opts);

}  // namespace diamondlab::verify
