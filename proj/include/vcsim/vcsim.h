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

/*
 * C interface to the virtual-cell uplink simulator. All objects are opaque
 * handles owned by the caller and released with the matching _destroy call.
 * Every fallible function returns a vcsim_status; on failure a description
 * is available from vcsim_last_error() on the same thread.
 */
#ifndef VCSIM_H
#define VCSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(VCSIM_BUILDING_LIBRARY)
#  define VCSIM_API __attribute__((visibility("default")))
#else
#  define VCSIM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vcsim_status {
  VCSIM_OK = 0,
  VCSIM_ERR_INVALID_ARGUMENT = 1,
  VCSIM_ERR_INFEASIBLE_SCHEDULE = 2,
  VCSIM_ERR_IO = 3,
  VCSIM_ERR_PARSE = 4,
  VCSIM_ERR_INTERNAL = 5
} vcsim_status;

typedef struct vcsim_config vcsim_config;
typedef struct vcsim_result vcsim_result;

typedef struct vcsim_row {
  uint32_t m;
  double gamma_d;
  double cgbr;
  double mean_unsatisfied;
  double stderr_unsatisfied;
  double mean_sum_rate;
  double stderr_sum_rate;
  uint64_t num_realizations;
} vcsim_row;

VCSIM_API const char* vcsim_version(void);
VCSIM_API const char* vcsim_last_error(void);
VCSIM_API const char* vcsim_status_string(vcsim_status status);

/* Built-in defaults: 20 BSs, 200 users, 24 bands, 28 GHz channel fits. */
VCSIM_API vcsim_status vcsim_config_create_default(vcsim_config** out);
VCSIM_API vcsim_status vcsim_config_load(const char* path, vcsim_config** out);
VCSIM_API void vcsim_config_destroy(vcsim_config* config);

VCSIM_API vcsim_status vcsim_config_set_realizations(vcsim_config* config, uint64_t count);
VCSIM_API vcsim_status vcsim_config_set_seed(vcsim_config* config, uint64_t seed);
VCSIM_API vcsim_status vcsim_config_set_threads(vcsim_config* config, uint32_t threads);
VCSIM_API vcsim_status vcsim_config_set_output(vcsim_config* config, const char* path);
VCSIM_API vcsim_status vcsim_config_set_m_values(vcsim_config* config, const uint32_t* values, size_t count);
VCSIM_API vcsim_status vcsim_config_set_gamma_d_values(vcsim_config* config, const double* values, size_t count);
VCSIM_API vcsim_status vcsim_config_set_cgbr_values(vcsim_config* config, const double* values, size_t count);

VCSIM_API vcsim_status vcsim_config_get_seed(const vcsim_config* config, uint64_t* seed);
/* Pointer stays valid until the config is modified or destroyed. */
VCSIM_API vcsim_status vcsim_config_get_output(const vcsim_config* config, const char** path);

VCSIM_API vcsim_status vcsim_run_sweep(const vcsim_config* config, vcsim_result** out);
VCSIM_API void vcsim_result_destroy(vcsim_result* result);
VCSIM_API size_t vcsim_result_row_count(const vcsim_result* result);
VCSIM_API vcsim_status vcsim_result_get_row(const vcsim_result* result, size_t index, vcsim_row* row);
VCSIM_API vcsim_status vcsim_result_write_csv(const vcsim_result* result, const char* path);

/* Debug artifacts (dendrogram, interference graph, frequency plan, power
 * allocation, per-user rates) for one grid point of one realization. */
VCSIM_API vcsim_status vcsim_dump_grid_point(const vcsim_config* config, uint64_t realization, uint32_t m,
                                             double gamma_d, const char* directory);
/* Same, for every (m, gamma_d) of the config, into directory/m<m>_g<gamma_d>/. */
VCSIM_API vcsim_status vcsim_dump_grid(const vcsim_config* config, uint64_t realization, const char* directory);

#ifdef __cplusplus
}
#endif

#endif /* VCSIM_H */
