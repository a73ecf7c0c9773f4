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

#include "certify.hpp"

#include "diamond.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "report.hpp"

namespace diamondlab::certify {

namespace {

double param(const models::ModelSpec& m, const std::string& key) {
  for (const auto& [k, v] : m.params)
    if (k == key) return v;
  throw InvalidArgument("model parameter '" + key + "' missing");
}

}  // namespace

Json certify_model(const models::ModelSpec& m, double tol) {
  const diamond::DiamondResult res = diamond::diamond_distance(m.channel, tol);
  std::vector<certificate::Labeled> certs{{"sdp_primal", res.primal}, {"sdp_dual", res.dual}};
  switch (m.name) {
    case models::ModelName::AD:
      certs.push_back({"analytic_dual", diamond::ad_dual_certificate(param(m, "p"), param(m, "gamma"))});
      break;
    case models::ModelName::IL:
      certs.push_back({"analytic_dual", diamond::il_dual_certificate(param(m, "p"))});
      break;
    case models::ModelName::IL2: {
      const auto ev = diamond::il2_exact(param(m, "p"), static_cast<linalg::Index>(param(m, "rank")),
                                         static_cast<linalg::Index>(param(m, "dim")));
      certs.push_back({"analytic_primal", ev.primal});
      certs.push_back({"analytic_dual", ev.dual});
      break;
    }
    default:
      break;
  }
  Json model = report::model_to_json(m);
  model["r"] = metrics::avg_error_rate(models::fidelity_map(m));
  model["D_lower"] = res.primal_value;
  model["D_upper"] = res.dual_value;
  model["status"] = diamond::to_string(res.status);
  return certificate::bundle(model, certs);
}

}  // namespace diamondlab::certify
