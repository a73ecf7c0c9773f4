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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "certificate.hpp"
#include "certify.hpp"
#include "errors.hpp"
#include "models.hpp"
#include "rng.hpp"

namespace dl = diamondlab;
using namespace diamondlab::certificate;
using dl::json_io::Json;

namespace {

Json round_trip(const Json& j) { return dl::json_io::parse(dl::json_io::dump(j), "round trip"); }

Json& find_cert(Json& doc, const std::string& label) {
  for (auto& c : doc["certificates"])
    if (c["label"] == label) return c;
  throw std::runtime_error("no certificate " + label);
}

bool names(const CheckReport& r, const std::string& fragment) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(fragment) != std::string::npos; });
}

std::vector<dl::models::ModelSpec> instances() {
  return {dl::models::cd(0.01, 0.02), dl::models::ad(1.0, 0.01), dl::models::il(0.2), dl::models::il2(0.3, 2, 3)};
}

}  // namespace

TEST(CertificateFile, RoundTripPasses) {
  for (const auto& m : instances()) {
    const Json doc = round_trip(dl::certify::certify_model(m));
    EXPECT_EQ(doc["format"], kFormat);
    const CheckReport rep = check(doc);
    EXPECT_TRUE(rep.ok) << dl::models::to_string(m.name) << ": "
                        << (rep.violations.empty() ? "" : rep.violations.front());
    EXPECT_GE(rep.items.size(), 10u);
  }
}

TEST(CertificateFile, ContainsAnalyticCertificates) {
  const Json ad = dl::certify::certify_model(dl::models::ad(1.0, 0.01));
  EXPECT_EQ(ad["certificates"].size(), 3u);
  Json copy = ad;
  const double objective = find_cert(copy, "analytic_dual")["objective"];
  EXPECT_LE(objective, 3 * ad["model"]["r"].get<double>() + 1e-12);
  EXPECT_EQ(dl::certify::certify_model(dl::models::il2(0.3, 2, 3))["certificates"].size(), 4u);
}

TEST(CertificateFile, WeakDualityIsChecked) {
  const CheckReport rep = check(dl::certify::certify_model(dl::models::ad(0.5, 0.1)));
  EXPECT_TRUE(std::any_of(rep.items.begin(), rep.items.end(),
                          [](const CheckItem& i) { return i.residual == "weak_duality"; }));
}

TEST(CertificateFile, ZeroedDualEntryRejected) {
  for (const auto& m : instances()) {
    Json doc = round_trip(dl::certify::certify_model(m));
    Json& z = find_cert(doc, "sdp_dual")["Z"];
    std::size_t best = 0;
    double largest = -1;
    for (std::size_t i = 0; i < z.size(); ++i) {
      const double v = std::abs(z[i][i][0].get<double>());
      if (v > largest) largest = v, best = i;
    }
    z[best][best] = Json::array({0.0, 0.0});
    const CheckReport rep = check(doc);
    EXPECT_FALSE(rep.ok);
    EXPECT_TRUE(names(rep, "sdp_dual: residual 'z_")) << rep.violations.front();
  }
}

TEST(CertificateFile, InflatedPrimalObjectiveRejected) {
  Json doc = dl::certify::certify_model(dl::models::cd(0.1, 0.1));
  find_cert(doc, "sdp_primal")["objective"] = 0.5;
  const CheckReport rep = check(doc);
  EXPECT_FALSE(rep.ok);
  EXPECT_TRUE(names(rep, "objective_mismatch"));
}

TEST(CertificateFile, ScaledPrimalRejected) {
  Json doc = dl::certify::certify_model(dl::models::cd(0.1, 0.1));
  Json& cert = find_cert(doc, "sdp_primal");
  for (auto& row : cert["W"])
    for (auto& e : row) e = Json::array({2 * e[0].get<double>(), 2 * e[1].get<double>()});
  cert["objective"] = 2 * cert["objective"].get<double>();
  const CheckReport rep = check(doc);
  EXPECT_FALSE(rep.ok);
  EXPECT_TRUE(names(rep, "rho_tensor_identity_minus_w_psd"));
  EXPECT_TRUE(names(rep, "weak_duality"));
}

TEST(CertificateFile, RhoTraceChecked) {
  Json doc = dl::certify::certify_model(dl::models::cd(0.1, 0.1));
  Json& rho = find_cert(doc, "sdp_primal")["rho"];
  rho[0][0] = Json::array({rho[0][0][0].get<double>() + 0.1, 0.0});
  EXPECT_TRUE(names(check(doc), "trace_rho"));
}

TEST(CertificateFile, MalformedInputThrows) {
  EXPECT_THROW(check(Json::object()), dl::InvalidArgument);
  Json doc = dl::certify::certify_model(dl::models::cd(0.1, 0.1));
  find_cert(doc, "sdp_dual")["dims"] = Json::array({2, 3});
  EXPECT_THROW(check(doc), dl::InvalidArgument);
  Json bad_kind = dl::certify::certify_model(dl::models::cd(0.1, 0.1));
  find_cert(bad_kind, "sdp_dual")["kind"] = "other";
  EXPECT_THROW(check(bad_kind), dl::InvalidArgument);
}

TEST(CertificateFile, ReportSerializes) {
  const CheckReport rep = check(dl::certify::certify_model(dl::models::cd(0.1, 0.0)));
  const Json j = report_to_json(rep);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["checks"].size(), rep.items.size());
}

TEST(JsonIo, MatrixRoundTripIsExact) {
  dl::rng::CounterRng g(3);
  const dl::linalg::ComplexMatrix m = g.complex_gaussian(3, 2);
  EXPECT_EQ(dl::json_io::matrix_from_json(round_trip(dl::json_io::matrix_to_json(m)), "m"), m);
}

TEST(JsonIo, ChannelRoundTrip) {
  const auto c = dl::models::random_cptp(2, 2, 5);
  const auto back = dl::json_io::channel_from_json(round_trip(dl::json_io::channel_to_json(c)));
  EXPECT_EQ(back.choi().matrix(), c.choi().matrix());
}

TEST(JsonIo, RejectsMalformedChannels) {
  EXPECT_THROW(dl::json_io::channel_from_json(Json::parse(R"({"dim": 2})")), dl::InvalidArgument);
  EXPECT_THROW(dl::json_io::channel_from_json(Json::parse(R"({"dim": 2, "kraus": [[[1, 0]]]})")),
               dl::InvalidArgument);
  EXPECT_THROW(dl::json_io::channel_from_json(Json::parse(R"({"dim": 2, "kraus": [[[2, 0], [0, 2]]]})")),
               dl::InvalidChannel);
  EXPECT_THROW(dl::json_io::parse("{", "text"), dl::InvalidArgument);
  EXPECT_THROW(dl::json_io::read_text_file("/nonexistent/file.json"), dl::IoError);
}
