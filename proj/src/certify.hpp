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

// Certificate emission for named models: the solver's primal and dual points
// plus any analytic construction known for the model.

#include "certificate.hpp"
#include "models.hpp"

namespace diamondlab::certify {

using json_io::Json;

/// Bundle with certificates labelled sdp_primal, sdp_dual and, where
/// available, analytic_primal / analytic_dual. The model section records the
/// parameters, the pipeline error rate and the certified bracket.
Json certify_model(const models::ModelSpec& m, double tol = diamond::kDefaultTolerance);

}  // namespace diamondlab::certify
