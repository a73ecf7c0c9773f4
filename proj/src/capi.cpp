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

#include "diamondlab/diamondlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "certificate.hpp"
#include "certify.hpp"
#include "diamond.hpp"
#include "errors.hpp"
#include "json_io.hpp"
#include "metrics.hpp"
#include "models.hpp"
#include "report.hpp"
#include "sweep.hpp"
#include "verify.hpp"

namespace dl = diamondlab;

struct dl_channel {
  dl::channel::Channel channel;
};

struct dl_model {
  dl::models::ModelSpec spec;
  dl_channel handle;
};

namespace {

thread_local std::string last_error;

dl_status fail(dl_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
dl_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const dl::InvalidChannel& e) {
    return fail(DL_ERR_INVALID_CHANNEL, e.what());
  } catch (const dl::InvalidArgument& e) {
    return fail(DL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const dl::IoError& e) {
    return fail(DL_ERR_IO, e.what());
  } catch (const dl::NoConvergence& e) {
    return fail(DL_ERR_NUMERICAL, e.what());
  } catch (const dl::Error& e) {
    return fail(DL_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DL_ERR_INTERNAL, "unknown error");
  }
}

#define DL_REQUIRE(cond, what) \
  if (!(cond)) return fail(DL_ERR_INVALID_ARGUMENT, what)

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dl::report::MetricsOptions convert(const dl_metrics_options* o) {
  dl_metrics_options defaults;
  dl_metrics_options_default(&defaults);
  if (!o) o = &defaults;
  dl::report::MetricsOptions out;
  out.sdp = o->sdp != 0;
  out.monte_carlo = o->monte_carlo != 0;
  out.mc.samples = o->mc_samples;
  out.mc.seed = o->seed;
  out.mc.threads = dl::sweep::resolve_threads(o->threads);
  out.kappa = o->kappa;
  out.tolerance = o->tolerance;
  out.full_space = o->full_space != 0;
  if (!(out.kappa >= 0.0)) throw dl::InvalidArgument("kappa must be nonnegative");
  if (!(out.tolerance > 0.0)) throw dl::InvalidArgument("tolerance must be positive");
  return out;
}

}  // namespace

extern "C" {

const char* dl_version(void) { return "1.0.0"; }

const char* dl_last_error(void) { return last_error.c_str(); }

const char* dl_status_string(dl_status status) {
  switch (status) {
    case DL_OK: return "ok";
    case DL_ERR_VERIFICATION: return "verification failure";
    case DL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DL_ERR_INVALID_CHANNEL: return "invalid channel";
    case DL_ERR_IO: return "i/o error";
    case DL_ERR_NUMERICAL: return "numerical failure";
    case DL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void dl_string_free(char* s) { std::free(s); }

dl_status dl_channel_from_kraus(size_t dim, size_t count, const double* kraus, dl_channel** out) {
  DL_REQUIRE(out, "out is NULL");
  DL_REQUIRE(kraus || count == 0, "kraus is NULL");
  DL_REQUIRE(dim > 0 && dim <= 16, "dimension must lie in [1, 16]");
  return guarded([&] {
    std::vector<dl::linalg::ComplexMatrix> ops;
    const auto d = static_cast<dl::linalg::Index>(dim);
    for (size_t k = 0; k < count; ++k) {
      dl::linalg::ComplexMatrix m(d, d);
      const double* base = kraus + 2 * k * dim * dim;
      for (dl::linalg::Index r = 0; r < d; ++r)
        for (dl::linalg::Index c = 0; c < d; ++c) m(r, c) = {base[2 * (r * d + c)], base[2 * (r * d + c) + 1]};
      ops.push_back(std::move(m));
    }
    *out = new dl_channel{dl::channel::Channel::from_kraus(std::move(ops))};
    return DL_OK;
  });
}

dl_status dl_channel_from_json(const char* text, dl_channel** out) {
  DL_REQUIRE(text && out, "text or out is NULL");
  return guarded([&] {
    *out = new dl_channel{dl::json_io::channel_from_json(dl::json_io::parse(text, "channel JSON"))};
    return DL_OK;
  });
}

dl_status dl_channel_load(const char* path, dl_channel** out) {
  DL_REQUIRE(path && out, "path or out is NULL");
  return guarded([&] {
    const std::string text = dl::json_io::read_text_file(path);
    *out = new dl_channel{dl::json_io::channel_from_json(dl::json_io::parse(text, path))};
    return DL_OK;
  });
}

void dl_channel_free(dl_channel* c) { delete c; }

dl_status dl_channel_dim(const dl_channel* c, size_t* out) {
  DL_REQUIRE(c && out, "channel or out is NULL");
  *out = static_cast<size_t>(c->channel.dim());
  return DL_OK;
}

dl_status dl_channel_is_trace_preserving(const dl_channel* c, int* out) {
  DL_REQUIRE(c && out, "channel or out is NULL");
  *out = c->channel.trace_preserving() ? 1 : 0;
  return DL_OK;
}

dl_status dl_avg_fidelity(const dl_channel* c, double* out) {
  DL_REQUIRE(c && out, "channel or out is NULL");
  return guarded([&] {
    *out = dl::metrics::avg_fidelity(c->channel);
    return DL_OK;
  });
}

dl_status dl_avg_error_rate(const dl_channel* c, double* out) {
  DL_REQUIRE(c && out, "channel or out is NULL");
  return guarded([&] {
    *out = dl::metrics::avg_error_rate(c->channel);
    return DL_OK;
  });
}

dl_status dl_unitarity(const dl_channel* c, double* out) {
  DL_REQUIRE(c && out, "channel or out is NULL");
  return guarded([&] {
    *out = dl::metrics::unitarity(c->channel);
    return DL_OK;
  });
}

dl_status dl_diamond_distance(const dl_channel* c, const dl_channel* reference, double tolerance, dl_diamond* out) {
  DL_REQUIRE(c && out, "channel or out is NULL");
  return guarded([&] {
    const dl::diamond::DiamondResult res =
        reference ? dl::diamond::diamond_distance(c->channel, reference->channel, tolerance)
                  : dl::diamond::diamond_distance(c->channel, tolerance);
    out->value = res.value();
    out->lower = res.primal_value;
    out->upper = res.dual_value;
    out->gap = res.gap;
    out->iterations = res.iterations;
    out->status = res.status == dl::diamond::Status::Optimal   ? DL_SOLVE_OPTIMAL
                  : res.status == dl::diamond::Status::MaxIter ? DL_SOLVE_MAX_ITER
                                                               : DL_SOLVE_INFEASIBLE_INPUT;
    return DL_OK;
  });
}

dl_status dl_model_create(const char* name, size_t count, const char* const* keys, const double* values,
                          dl_model** out) {
  DL_REQUIRE(name && out, "name or out is NULL");
  DL_REQUIRE(count == 0 || (keys && values), "keys or values is NULL");
  return guarded([&] {
    std::map<std::string, double> params;
    for (size_t i = 0; i < count; ++i) {
      if (!keys[i]) throw dl::InvalidArgument("parameter key is NULL");
      if (!params.emplace(keys[i], values[i]).second)
        throw dl::InvalidArgument(std::string("duplicate parameter '") + keys[i] + "'");
    }
    dl::models::ModelSpec spec = dl::models::make_model(name, params);
    dl::channel::Channel ch = spec.channel;
    *out = new dl_model{std::move(spec), dl_channel{std::move(ch)}};
    return DL_OK;
  });
}

void dl_model_free(dl_model* m) { delete m; }

dl_status dl_model_channel(const dl_model* m, const dl_channel** out) {
  DL_REQUIRE(m && out, "model or out is NULL");
  *out = &m->handle;
  return DL_OK;
}

void dl_metrics_options_default(dl_metrics_options* opts) {
  if (!opts) return;
  opts->sdp = 1;
  opts->monte_carlo = 0;
  opts->mc_samples = 100000;
  opts->seed = 0;
  opts->threads = 0;
  opts->kappa = 10.0;
  opts->tolerance = 1e-7;
  opts->full_space = 0;
}

dl_status dl_model_metrics_json(const dl_model* m, const dl_metrics_options* opts, char** out) {
  DL_REQUIRE(m && out, "model or out is NULL");
  return guarded([&] {
    *out = copy_string(dl::json_io::dump(dl::report::metrics_report(m->spec, convert(opts))));
    return DL_OK;
  });
}

dl_status dl_channel_metrics_json(const dl_channel* c, const dl_metrics_options* opts, char** out) {
  DL_REQUIRE(c && out, "channel or out is NULL");
  return guarded([&] {
    *out = copy_string(dl::json_io::dump(dl::report::metrics_report(c->channel, convert(opts))));
    return DL_OK;
  });
}

dl_status dl_metrics_table(const char* report_json, char** out) {
  DL_REQUIRE(report_json && out, "report or out is NULL");
  return guarded([&] {
    *out = copy_string(dl::report::render_table(dl::json_io::parse(report_json, "metrics report")));
    return DL_OK;
  });
}

dl_status dl_sweep_preset(const char* name, char** config_json) {
  DL_REQUIRE(name && config_json, "name or out is NULL");
  return guarded([&] {
    const std::string n = name;
    dl::sweep::SweepConfig cfg;
    if (n == "fig1") cfg = dl::sweep::fig1_config();
    else if (n == "fig2") cfg = dl::sweep::fig2_config();
    else throw dl::InvalidArgument("unknown sweep preset '" + n + "' (known: fig1, fig2)");
    *config_json = copy_string(dl::json_io::dump(dl::sweep::config_to_json(cfg)));
    return DL_OK;
  });
}

dl_status dl_sweep_csv(const char* config_json, char** csv) {
  DL_REQUIRE(config_json && csv, "config or out is NULL");
  return guarded([&] {
    const auto cfg = dl::sweep::config_from_json(dl::json_io::parse(config_json, "sweep config"));
    *csv = copy_string(dl::sweep::to_csv(dl::sweep::run(cfg)));
    return DL_OK;
  });
}

dl_status dl_verify(const char* suite, size_t samples, uint64_t seed, double tolerance_scale, unsigned threads,
                    char** report_json) {
  DL_REQUIRE(suite && report_json, "suite or out is NULL");
  return guarded([&] {
    dl::verify::VerifyOptions opts;
    opts.suite = dl::verify::suite_from_string(suite);
    opts.samples = samples;
    opts.seed = seed;
    opts.tolerance_scale = tolerance_scale;
    opts.threads = threads;
    const dl::verify::VerifyReport rep = dl::verify::run(opts);
    *report_json = copy_string(dl::json_io::dump(dl::verify::to_json(rep, opts)));
    if (!rep.ok()) {
      last_error = std::to_string(rep.violations.size()) + " property violation(s)";
      return DL_ERR_VERIFICATION;
    }
    return DL_OK;
  });
}

dl_status dl_certify_model(const dl_model* m, double tolerance, char** certificate_json) {
  DL_REQUIRE(m && certificate_json, "model or out is NULL");
  return guarded([&] {
    if (!(tolerance > 0.0)) throw dl::InvalidArgument("tolerance must be positive");
    *certificate_json = copy_string(dl::json_io::dump(dl::certify::certify_model(m->spec, tolerance)));
    return DL_OK;
  });
}

dl_status dl_certificate_check(const char* certificate_json, double tolerance, char** report_json) {
  DL_REQUIRE(certificate_json && report_json, "certificate or out is NULL");
  return guarded([&] {
    const double tol = tolerance > 0.0 ? tolerance : dl::diamond::kCertificateTolerance;
    const auto rep = dl::certificate::check(dl::json_io::parse(certificate_json, "certificate file"), tol);
    *report_json = copy_string(dl::json_io::dump(dl::certificate::report_to_json(rep)));
    if (!rep.ok) {
      last_error = rep.violations.front();
      return DL_ERR_VERIFICATION;
    }
    return DL_OK;
  });
}

dl_status dl_write_file(const char* path, const char* text) {
  DL_REQUIRE(path && text, "path or text is NULL");
  return guarded([&] {
    dl::json_io::write_text_file(path, text);
    return DL_OK;
  });
}

dl_status dl_read_file(const char* path, char** text) {
  DL_REQUIRE(path && text, "path or out is NULL");
  return guarded([&] {
    *text = copy_string(dl::json_io::read_text_file(path));
    return DL_OK;
  });
}

}  // extern "C"
