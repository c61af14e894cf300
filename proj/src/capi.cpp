/*
 * SPDX-License-Identifier: Apache-2.0
 * Copyright (c) 2026 The vcsim Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vcsim/vcsim.h"

#include <exception>
#include <new>
#include <string>

#include "vcsim/config.hpp"
#include "vcsim/harness.hpp"

struct vcsim_config {
  vcsim::harness::SweepConfig cfg;
};

struct vcsim_result {
  std::vector<vcsim::harness::AggregateRow> rows;
  std::uint64_t seed = 0;
};

namespace {

thread_local std::string last_error;

vcsim_status to_status(vcsim::ErrorCode code) {
  switch (code) {
    case vcsim::ErrorCode::invalid_argument: return VCSIM_ERR_INVALID_ARGUMENT;
    case vcsim::ErrorCode::infeasible_schedule: return VCSIM_ERR_INFEASIBLE_SCHEDULE;
    case vcsim::ErrorCode::io: return VCSIM_ERR_IO;
    case vcsim::ErrorCode::parse: return VCSIM_ERR_PARSE;
    case vcsim::ErrorCode::internal: return VCSIM_ERR_INTERNAL;
  }
  return VCSIM_ERR_INTERNAL;
}

template <typename F>
vcsim_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return VCSIM_OK;
  } catch (const vcsim::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return VCSIM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return VCSIM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return VCSIM_ERR_INTERNAL;
  }
}

vcsim_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return VCSIM_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* vcsim_version(void) { return "1.0.0"; }

const char* vcsim_last_error(void) { return last_error.c_str(); }

const char* vcsim_status_string(vcsim_status status) {
  switch (status) {
    case VCSIM_OK: return "ok";
    case VCSIM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case VCSIM_ERR_INFEASIBLE_SCHEDULE: return "infeasible size schedule";
    case VCSIM_ERR_IO: return "i/o error";
    case VCSIM_ERR_PARSE: return "parse error";
    case VCSIM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

vcsim_status vcsim_config_create_default(vcsim_config** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new vcsim_config{}; });
}

vcsim_status vcsim_config_load(const char* path, vcsim_config** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new vcsim_config{vcsim::config::load_sweep_config(path)}; });
}

void vcsim_config_destroy(vcsim_config* config) { delete config; }

vcsim_status vcsim_config_set_realizations(vcsim_config* config, uint64_t count) {
  if (!config) return null_argument("config");
  if (count == 0) {
    last_error = "realization count must be >= 1";
    return VCSIM_ERR_INVALID_ARGUMENT;
  }
  config->cfg.num_realizations = count;
  return VCSIM_OK;
}

vcsim_status vcsim_config_set_seed(vcsim_config* config, uint64_t seed) {
  if (!config) return null_argument("config");
  config->cfg.scenario.seed = seed;
  return VCSIM_OK;
}

vcsim_status vcsim_config_set_threads(vcsim_config* config, uint32_t threads) {
  if (!config) return null_argument("config");
  config->cfg.threads = threads;
  return VCSIM_OK;
}

vcsim_status vcsim_config_set_output(vcsim_config* config, const char* path) {
  if (!config) return null_argument("config");
  if (!path) return null_argument("path");
  return guarded([&] { config->cfg.output_path = path; });
}

vcsim_status vcsim_config_set_m_values(vcsim_config* config, const uint32_t* values, size_t count) {
  if (!config) return null_argument("config");
  if (!values || count == 0) return null_argument("values");
  return guarded([&] { config->cfg.m_values.assign(values, values + count); });
}

vcsim_status vcsim_config_set_gamma_d_values(vcsim_config* config, const double* values, size_t count) {
  if (!config) return null_argument("config");
  if (!values || count == 0) return null_argument("values");
  return guarded([&] { config->cfg.gamma_d_values.assign(values, values + count); });
}

vcsim_status vcsim_config_set_cgbr_values(vcsim_config* config, const double* values, size_t count) {
  if (!config) return null_argument("config");
  if (!values || count == 0) return null_argument("values");
  return guarded([&] { config->cfg.cgbr_values.assign(values, values + count); });
}

vcsim_status vcsim_config_get_seed(const vcsim_config* config, uint64_t* seed) {
  if (!config) return null_argument("config");
  if (!seed) return null_argument("seed");
  *seed = config->cfg.scenario.seed;
  return VCSIM_OK;
}

vcsim_status vcsim_config_get_output(const vcsim_config* config, const char** path) {
  if (!config) return null_argument("config");
  if (!path) return null_argument("path");
  *path = config->cfg.output_path.c_str();
  return VCSIM_OK;
}

vcsim_status vcsim_run_sweep(const vcsim_config* config, vcsim_result** out) {
  if (!config) return null_argument("config");
  if (!out) return null_argument("out");
  return guarded([&] {
    auto rows = vcsim::harness::run_sweep(config->cfg);
    *out = new vcsim_result{std::move(rows), config->cfg.scenario.seed};
  });
}

void vcsim_result_destroy(vcsim_result* result) { delete result; }

size_t vcsim_result_row_count(const vcsim_result* result) { return result ? result->rows.size() : 0; }

vcsim_status vcsim_result_get_row(const vcsim_result* result, size_t index, vcsim_row* row) {
  if (!result) return null_argument("result");
  if (!row) return null_argument("row");
  if (index >= result->rows.size()) {
    last_error = "row index " + std::to_string(index) + " out of range";
    return VCSIM_ERR_INVALID_ARGUMENT;
  }
  const auto& r = result->rows[index];
  *row = vcsim_row{static_cast<uint32_t>(r.m), r.gamma_d, r.cgbr, r.mean_unsatisfied, r.stderr_unsatisfied,
                   r.mean_sum_rate, r.stderr_sum_rate, static_cast<uint64_t>(r.num_realizations)};
  return VCSIM_OK;
}

vcsim_status vcsim_result_write_csv(const vcsim_result* result, const char* path) {
  if (!result) return null_argument("result");
  if (!path) return null_argument("path");
  return guarded([&] { vcsim::harness::emit_csv(result->rows, path, result->seed); });
}

vcsim_status vcsim_dump_grid_point(const vcsim_config* config, uint64_t realization, uint32_t m, double gamma_d,
                                   const char* directory) {
  if (!config) return null_argument("config");
  if (!directory) return null_argument("directory");
  return guarded([&] { vcsim::harness::dump_grid_point(config->cfg, realization, m, gamma_d, directory); });
}

vcsim_status vcsim_dump_grid(const vcsim_config* config, uint64_t realization, const char* directory) {
  if (!config) return null_argument("config");
  if (!directory) return null_argument("directory");
  return guarded([&] { vcsim::harness::dump_grid(config->cfg, realization, directory); });
}

}  // extern "C"
