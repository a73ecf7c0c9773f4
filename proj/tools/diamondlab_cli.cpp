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

// diamondlab command-line tool: metric reports, parameter sweeps,
// verification suites and certificate files. Exit codes: 0 ok,
// 1 verification failure, 2 usage, 3 invalid channel, 4 I/O.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "diamondlab/diamondlab.h"

namespace {

constexpr int kUsage = 2;

struct Text {
  char* ptr = nullptr;
  ~Text() { dl_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct ModelFlags {
  std::string name;
  std::map<std::string, double> params;
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags, bool required) {
  auto* opt = cmd->add_option("--channel,--model", flags.name, "Model name: cd, ad, il, il2, cl, rot, cd2");
  if (required) opt->required();
  for (const char* key : {"p", "delta", "gamma", "rank", "dim", "delta1", "delta2", "eps"}) {
    const std::string k = key;
    cmd->add_option_function<double>("--" + k, [&flags, k](double v) { flags.params[k] = v; },
                                     "Model parameter " + k);
  }
}

int report_error(dl_status status) {
  std::cerr << "error: " << dl_status_string(status);
  if (*dl_last_error()) std::cerr << ": " << dl_last_error();
  std::cerr << '\n';
  return static_cast<int>(status);
}

dl_status make_model(const ModelFlags& flags, dl_model** out) {
  std::vector<const char*> keys;
  std::vector<double> values;
  for (const auto& [k, v] : flags.params) {
    keys.push_back(k.c_str());
    values.push_back(v);
  }
  return dl_model_create(flags.name.c_str(), keys.size(), keys.data(), values.data(), out);
}

using ModelPtr = std::unique_ptr<dl_model, decltype(&dl_model_free)>;
using ChannelPtr = std::unique_ptr<dl_channel, decltype(&dl_channel_free)>;

dl_status emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return DL_OK;
  }
  return dl_write_file(path.c_str(), text.c_str());
}

struct MetricsArgs {
  ModelFlags model;
  std::string kraus_path;
  std::string format = "json";
  std::string out;
  bool no_sdp = false;
  bool mc = false;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  double kappa = 10.0;
  double tol = 1e-7;
  bool full_space = false;
};

int run_metrics(const MetricsArgs& a) {
  if (a.model.name.empty() == a.kraus_path.empty()) {
    std::cerr << "error: metrics needs exactly one of --channel or --kraus\n";
    return kUsage;
  }
  dl_metrics_options opts;
  dl_metrics_options_default(&opts);
  opts.sdp = a.no_sdp ? 0 : 1;
  opts.monte_carlo = a.mc ? 1 : 0;
  opts.mc_samples = a.samples;
  opts.seed = a.seed;
  opts.threads = a.threads;
  opts.kappa = a.kappa;
  opts.tolerance = a.tol;
  opts.full_space = a.full_space ? 1 : 0;
  Text report;
  dl_status s;
  if (!a.kraus_path.empty()) {
    dl_channel* raw = nullptr;
    if ((s = dl_channel_load(a.kraus_path.c_str(), &raw)) != DL_OK) return report_error(s);
    ChannelPtr ch(raw, dl_channel_free);
    s = dl_channel_metrics_json(ch.get(), &opts, &report.ptr);
  } else {
    dl_model* raw = nullptr;
    if ((s = make_model(a.model, &raw)) != DL_OK) return report_error(s);
    ModelPtr m(raw, dl_model_free);
    s = dl_model_metrics_json(m.get(), &opts, &report.ptr);
  }
  if (s != DL_OK) return report_error(s);
  std::string text = report.str();
  if (a.format == "table") {
    Text table;
    if ((s = dl_metrics_table(text.c_str(), &table.ptr)) != DL_OK) return report_error(s);
    text = table.str();
  }
  if ((s = emit(text, a.out)) != DL_OK) return report_error(s);
  return 0;
}

struct SweepArgs {
  std::string preset;
  std::string config_path;
  ModelFlags model;
  std::string axis1, axis2;
  std::vector<std::string> outputs;
  bool sdp = false;
  unsigned threads = 0;
  std::string out;
  bool print_config = false;
};

// Axis syntax: param:min:max:steps[:linear|log].
nlohmann::json parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() < 4 || parts.size() > 5)
    throw CLI::ValidationError("axis '" + spec + "'", "expected param:min:max:steps[:linear|log]");
  try {
    return {{"param", parts[0]},
            {"min", std::stod(parts[1])},
            {"max", std::stod(parts[2])},
            {"steps", std::stoi(parts[3])},
            {"scale", parts.size() == 5 ? parts[4] : "linear"}};
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("axis '" + spec + "'", "bounds and steps must be numbers");
  }
}

int run_sweep(const SweepArgs& a) {
  dl_status s;
  nlohmann::json config;
  const int sources = !a.preset.empty() + !a.config_path.empty() + !a.model.name.empty();
  if (sources != 1) {
    std::cerr << "error: sweep needs exactly one of --preset, --config or --channel\n";
    return kUsage;
  }
  if (!a.preset.empty() || !a.config_path.empty()) {
    Text text;
    s = a.preset.empty() ? dl_read_file(a.config_path.c_str(), &text.ptr)
                         : dl_sweep_preset(a.preset.c_str(), &text.ptr);
    if (s != DL_OK) return report_error(s);
    config = nlohmann::json::parse(text.str(), nullptr, false);
    if (!config.is_object()) {
      std::cerr << "error: sweep config is not a JSON object\n";
      return kUsage;
    }
  } else {
    if (a.axis1.empty() || a.axis2.empty()) {
      std::cerr << "error: --channel sweeps need --axis1 and --axis2\n";
      return kUsage;
    }
    config = {{"model", a.model.name}, {"fixed", a.model.params}, {"axis1", parse_axis(a.axis1)},
              {"axis2", parse_axis(a.axis2)}};
  }
  if (a.sdp) config["evaluator"] = "sdp";
  if (a.threads) config["threads"] = a.threads;
  if (!a.outputs.empty()) config["outputs"] = a.outputs;
  if (a.print_config) {
    std::cout << config.dump(2) << '\n';
    return 0;
  }
  Text csv;
  if ((s = dl_sweep_csv(config.dump().c_str(), &csv.ptr)) != DL_OK) return report_error(s);
  if ((s = emit(csv.str(), a.out)) != DL_OK) return report_error(s);
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::size_t samples = 200;
  std::uint64_t seed = 7;
  double tolerance_scale = 1.0;
  unsigned threads = 0;
  std::string report;
};

int run_verify(const VerifyArgs& a) {
  Text report;
  const dl_status s =
      dl_verify(a.suite.c_str(), a.samples, a.seed, a.tolerance_scale, a.threads, &report.ptr);
  if (s != DL_OK && s != DL_ERR_VERIFICATION) return report_error(s);
  if (!a.report.empty()) {
    const dl_status w = dl_write_file(a.report.c_str(), report.ptr);
    if (w != DL_OK) return report_error(w);
  }
  std::cout << report.str();
  if (s == DL_ERR_VERIFICATION) std::cerr << "verification failed: " << dl_last_error() << '\n';
  return static_cast<int>(s);
}

struct CertifyArgs {
  ModelFlags model;
  std::string check_path;
  std::string out;
  double tol = 1e-7;
  double check_tol = 0.0;
};

int run_certify(const CertifyArgs& a) {
  dl_status s;
  if (!a.check_path.empty()) {
    if (!a.model.name.empty()) {
      std::cerr << "error: --check does not take model flags\n";
      return kUsage;
    }
    Text text, report;
    if ((s = dl_read_file(a.check_path.c_str(), &text.ptr)) != DL_OK) return report_error(s);
    s = dl_certificate_check(text.ptr, a.check_tol, &report.ptr);
    if (s != DL_OK && s != DL_ERR_VERIFICATION) return report_error(s);
    std::cout << report.str();
    if (s == DL_ERR_VERIFICATION) std::cerr << "certificate rejected: " << dl_last_error() << '\n';
    return static_cast<int>(s);
  }
  if (a.model.name.empty()) {
    std::cerr << "error: certify needs --channel or --check\n";
    return kUsage;
  }
  dl_model* raw = nullptr;
  if ((s = make_model(a.model, &raw)) != DL_OK) return report_error(s);
  ModelPtr m(raw, dl_model_free);
  Text cert;
  if ((s = dl_certify_model(m.get(), a.tol, &cert.ptr)) != DL_OK) return report_error(s);
  if ((s = emit(cert.str(), a.out)) != DL_OK) return report_error(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Average, unitarity and worst-case error measures of quantum channels"};
  app.set_version_flag("--version", dl_version());
  app.require_subcommand(1);

  MetricsArgs metrics;
  auto* m = app.add_subcommand("metrics", "Report r, u, D, closed forms, bounds and certificate residuals");
  add_model_flags(m, metrics.model, false);
  m->add_option("--kraus", metrics.kraus_path, "Channel JSON file { dim, kraus }");
  m->add_option("--format", metrics.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  m->add_option("--out", metrics.out, "Output file (default stdout)");
  m->add_flag("--no-sdp", metrics.no_sdp, "Skip the diamond-distance solve");
  m->add_flag("--mc", metrics.mc, "Add Haar Monte-Carlo estimates");
  m->add_option("--samples", metrics.samples, "Monte-Carlo samples")->check(CLI::Range(std::size_t{100}, std::size_t{1} << 40));
  m->add_option("--seed", metrics.seed, "Monte-Carlo seed");
  m->add_option("--threads", metrics.threads, "Worker threads (0: automatic)");
  m->add_option("--kappa", metrics.kappa, "Scaling-witness threshold");
  m->add_option("--tol", metrics.tol, "Diamond-distance gap tolerance");
  m->add_flag("--full-space", metrics.full_space, "Leakage models over the full space");

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "Two-parameter sweep written as CSV");
  sw->add_option("--preset", sweep.preset, "fig1 or fig2");
  sw->add_option("--config", sweep.config_path, "Sweep configuration JSON file");
  add_model_flags(sw, sweep.model, false);
  sw->add_option("--axis1", sweep.axis1, "param:min:max:steps[:linear|log] (outer)");
  sw->add_option("--axis2", sweep.axis2, "param:min:max:steps[:linear|log] (inner)");
  sw->add_option("--outputs", sweep.outputs, "Columns to keep")->delimiter(',');
  sw->add_flag("--sdp", sweep.sdp, "Evaluate D with the SDP solver");
  sw->add_option("--threads", sweep.threads, "Worker threads (0: automatic, capped by DIAMONDLAB_THREADS)");
  sw->add_option("--out", sweep.out, "Output CSV file (default stdout)");
  sw->add_flag("--print-config", sweep.print_config, "Print the resolved configuration and exit");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the verification suites");
  v->add_option("--suite", verify.suite, "golden, fuzz or all")->check(CLI::IsMember({"golden", "fuzz", "all"}));
  v->add_option("--samples", verify.samples, "Fuzz samples per family")->check(CLI::PositiveNumber);
  v->add_option("--seed", verify.seed, "Fuzz seed");
  v->add_option("--tolerance-scale", verify.tolerance_scale, "Multiply every tolerance")->check(CLI::PositiveNumber);
  v->add_option("--threads", verify.threads, "Worker threads (0: automatic)");
  v->add_option("--report", verify.report, "Also write the JSON report to this file");

  CertifyArgs certify;
  auto* c = app.add_subcommand("certify", "Emit or check diamond-distance certificates");
  add_model_flags(c, certify.model, false);
  c->add_option("--check", certify.check_path, "Certificate file to re-verify");
  c->add_option("--out", certify.out, "Output file (default stdout)");
  c->add_option("--tol", certify.tol, "Solver gap tolerance");
  c->add_option("--check-tol", certify.check_tol, "Residual tolerance for --check (default 1e-8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*m) return run_metrics(metrics);
    if (*sw) return run_sweep(sweep);
    if (*v) return run_verify(verify);
    if (*c) return run_certify(certify);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
