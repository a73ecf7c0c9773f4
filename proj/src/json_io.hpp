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

// JSON encodings shared by the command-line tools: complex matrices as
// row-major lists of [re, im] pairs, and channel specifications
// { "dim": d, "kraus": [ matrix, ... ] }.

#include <string>

#include <json.hpp>

#include "channel.hpp"

namespace diamondlab::json_io {

using Json = nlohmann::json;
using linalg::ComplexMatrix;

Json matrix_to_json(const ComplexMatrix& m);
/// Accepts [re, im] pairs or plain numbers as entries. Throws InvalidArgument
/// on ragged or malformed input.
ComplexMatrix matrix_from_json(const Json& j, const std::string& what);

Json channel_to_json(const channel::Channel& c);
channel::Channel channel_from_json(const Json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
Json parse(const std::string& text, const std::string& what);

/// Deterministic serialization: sorted keys, two-space indent, shortest
/// round-trip doubles, trailing newline.
std::string dump(const Json& j);

}  // namespace diamondlab::json_io
