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

#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace diamondlab::json_io {

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (linalg::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (linalg::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw InvalidArgument(what + ": expected a nonempty list of rows");
  const auto rows = static_cast<linalg::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw InvalidArgument(what + ": rows must be nonempty lists");
  const auto cols = static_cast<linalg::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (linalg::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<linalg::Index>(row.size()) != cols)
      throw InvalidArgument(what + ": ragged matrix rows");
    for (linalg::Index c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      if (e.is_number()) {
        m(r, c) = e.get<double>();
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = {e[0].get<double>(), e[1].get<double>()};
      } else {
        throw InvalidArgument(what + ": entries must be numbers or [re, im] pairs");
      }
    }
  }
  if (!linalg::is_finite(m)) throw InvalidArgument(what + ": non-finite entry");
  return m;
}

Json channel_to_json(const channel::Channel& c) {
  Json kraus = Json::array();
  for (const auto& k : c.kraus()) kraus.push_back(matrix_to_json(k));
  return Json{{"dim", c.dim()}, {"kraus", kraus}};
}

channel::Channel channel_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j["kraus"].is_array() || j["kraus"].empty())
    throw InvalidArgument("channel spec: expected an object with a nonempty \"kraus\" list");
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < j["kraus"].size(); ++i)
    kraus.push_back(matrix_from_json(j["kraus"][i], "channel spec: kraus[" + std::to_string(i) + "]"));
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) throw InvalidArgument("channel spec: \"dim\" must be an integer");
    const auto dim = j["dim"].get<linalg::Index>();
    for (const auto& k : kraus)
      if (k.rows() != dim || k.cols() != dim)
        throw DimensionMismatch("channel spec: Kraus operator shape does not match \"dim\"");
  }
  return channel::Channel::from_kraus(std::move(kraus));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error while writing '" + path + "'");
}

Json parse(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(what + ": invalid JSON (" + e.what() + ")");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace diamondlab::json_io
