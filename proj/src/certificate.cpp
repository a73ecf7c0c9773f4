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

#include "certificate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace diamondlab::certificate {

namespace {

using linalg::ComplexMatrix;
using linalg::HermitianMatrix;
using linalg::Index;

struct Parsed {
  std::string label;
  std::string kind;
  Index dim_a = 0, dim_b = 0;
  ComplexMatrix j;
  double objective = 0.0;
  double recomputed = 0.0;
  bool usable = true;
};

double negativity(const ComplexMatrix& m) {
  return std::max(0.0, -linalg::min_eigenvalue(HermitianMatrix::symmetrized(m)));
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw InvalidArgument(where + ": missing field \"" + key + "\"");
  return obj[key];
}

}  // namespace

Json to_json(const Labeled& c) {
  const auto& cert = c.cert;
  Json residuals = Json::array();
  for (const auto& r : cert.residuals) residuals.push_back({{"name", r.name}, {"value", r.value}});
  Json j{{"label", c.label},
         {"kind", diamond::to_string(cert.kind)},
         {"dims", {cert.dims.a, cert.dims.b}},
         {"j_delta", json_io::matrix_to_json(cert.j_delta.matrix())},
         {"objective", cert.objective},
         {"residuals", residuals}};
  if (cert.kind == diamond::CertificateKind::Primal) {
    j["rho"] = json_io::matrix_to_json(cert.rho.matrix());
    j["W"] = json_io::matrix_to_json(cert.w.matrix());
  } else {
    j["Z"] = json_io::matrix_to_json(cert.z.matrix());
  }
  return j;
}

Json bundle(const Json& model, const std::vector<Labeled>& certs) {
  Json list = Json::array();
  for (const auto& c : certs) list.push_back(to_json(c));
  return Json{{"format", kFormat}, {"version", 1}, {"model", model}, {"certificates", list}};
}

CheckReport check(const Json& doc, double tol) {
  CheckReport report;
  report.tolerance = tol;
  if (!doc.is_object() || !doc.contains("certificates") || !doc["certificates"].is_array())
    throw InvalidArgument("certificate file: expected an object with a \"certificates\" list");
  if (doc.contains("format") && doc["format"] != kFormat)
    throw InvalidArgument("certificate file: unknown format tag");

  auto record = [&](const std::string& cert, const std::string& name, double value) {
    const bool passed = std::isfinite(value) && value <= tol;
    report.items.push_back({cert, name, value, passed});
    if (!passed) {
      std::ostringstream os;
      os.precision(6);
      os << cert << ": residual '" << name << "' = " << value << " exceeds " << tol;
      report.violations.push_back(os.str());
    }
  };

  std::vector<Parsed> parsed;
  const Json& list = doc["certificates"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Json& c = list[i];
    Parsed p;
    p.label = c.contains("label") && c["label"].is_string() ? c["label"].get<std::string>()
                                                             : "certificate[" + std::to_string(i) + "]";
    const std::string where = "certificate '" + p.label + "'";
    p.kind = field(c, "kind", where).get<std::string>();
    const Json& dims = field(c, "dims", where);
    if (!dims.is_array() || dims.size() != 2) throw InvalidArgument(where + ": dims must be [dA, dB]");
    p.dim_a = dims[0].get<Index>();
    p.dim_b = dims[1].get<Index>();
    const Index n = p.dim_a * p.dim_b;
    p.j = json_io::matrix_from_json(field(c, "j_delta", where), where + " j_delta");
    p.objective = field(c, "objective", where).get<double>();
    if (p.j.rows() != n || p.j.cols() != n) throw DimensionMismatch(where + ": j_delta shape does not match dims");
    record(p.label, "j_delta_hermitian", linalg::hermiticity_defect(p.j));
    const ComplexMatrix j_sym = 0.5 * (p.j + p.j.adjoint());

    if (p.kind == "primal") {
      const ComplexMatrix rho = json_io::matrix_from_json(field(c, "rho", where), where + " rho");
      const ComplexMatrix w = json_io::matrix_from_json(field(c, "W", where), where + " W");
      if (rho.rows() != p.dim_a || rho.cols() != p.dim_a || w.rows() != n || w.cols() != n)
        throw DimensionMismatch(where + ": rho or W shape does not match dims");
      record(p.label, "rho_hermitian", linalg::hermiticity_defect(rho));
      record(p.label, "w_hermitian", linalg::hermiticity_defect(w));
      const ComplexMatrix rho_s = 0.5 * (rho + rho.adjoint());
      const ComplexMatrix w_s = 0.5 * (w + w.adjoint());
      record(p.label, "trace_rho", std::abs(rho_s.trace().real() - 1.0));
      record(p.label, "rho_psd", negativity(rho_s));
      record(p.label, "w_psd", negativity(w_s));
      record(p.label, "rho_tensor_identity_minus_w_psd",
             negativity(linalg::kron(rho_s, ComplexMatrix::Identity(p.dim_b, p.dim_b)) - w_s));
      p.recomputed = (j_sym.conjugate().cwiseProduct(w_s)).sum().real();
    } else if (p.kind == "dual") {
      const ComplexMatrix z = json_io::matrix_from_json(field(c, "Z", where), where + " Z");
      if (z.rows() != n || z.cols() != n) throw DimensionMismatch(where + ": Z shape does not match dims");
      record(p.label, "z_hermitian", linalg::hermiticity_defect(z));
      const ComplexMatrix z_s = 0.5 * (z + z.adjoint());
      record(p.label, "z_psd", negativity(z_s));
      record(p.label, "z_minus_j_psd", negativity(z_s - j_sym));
      const HermitianMatrix reduced = linalg::partial_trace(HermitianMatrix::symmetrized(z_s), p.dim_a,
                                                            p.dim_b, linalg::Subsystem::A);
      p.recomputed = linalg::operator_norm(reduced);
    } else {
      throw InvalidArgument(where + ": kind must be \"primal\" or \"dual\"");
    }
    record(p.label, "objective_mismatch",
           std::abs(p.recomputed - p.objective) / std::max(1.0, std::abs(p.recomputed)));
    parsed.push_back(std::move(p));
  }

  for (const auto& pr : parsed) {
    if (pr.kind != "primal") continue;
    for (const auto& du : parsed) {
      if (du.kind != "dual" || du.j.rows() != pr.j.rows() || (du.j - pr.j).norm() > 1e-12) continue;
      record(pr.label + " vs " + du.label, "weak_duality", std::max(0.0, pr.recomputed - du.recomputed));
    }
  }
  report.ok = report.violations.empty();
  return report;
}

CheckReport check_file(const std::string& path, double tol) {
  return check(json_io::parse(json_io::read_text_file(path), path), tol);
}

Json report_to_json(const CheckReport& r) {
  Json items = Json::array();
  for (const auto& it : r.items)
    items.push_back({{"certificate", it.certificate}, {"residual", it.residual}, {"value", it.value},
                     {"passed", it.passed}});
  return Json{{"ok", r.ok}, {"tolerance", r.tolerance}, {"checks", items}, {"violations", r.violations}};
}

}  // namespace diamondlab::certificate
