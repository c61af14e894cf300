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

#include "vcsim/scenario.hpp"

#include <algorithm>
#include <random>

namespace vcsim::scenario {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::invalid_argument, std::string("invalid scenario config: ") + what);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    0x76637369u};
  return std::mt19937_64(seq);
}

}  // namespace

void validate(const ScenarioConfig& c) {
  require(c.num_bs >= 1, "num_bs must be >= 1");
  require(c.num_bands >= 1, "num_bands must be >= 1");
  require(c.side_length > 0, "side_length must be > 0");
  require(c.total_bandwidth > 0, "total_bandwidth must be > 0");
  require(c.band_width() > 0, "per-band width must be > 0");
  require(std::isfinite(c.noise_psd_dbm_hz), "noise_psd must be finite");
  require(std::isfinite(c.user_power_budget_dbm), "user_power_budget must be finite");
  const auto& p = c.channel;
  require(p.shadowing_sigma_los >= 0 && p.shadowing_sigma_nlos >= 0, "shadowing sigmas must be >= 0");
  require(p.los_decay >= 0, "los_decay must be >= 0");
  require(p.pathloss_exponent_los > 0 && p.pathloss_exponent_nlos > 0, "path-loss exponents must be > 0");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double noise_power_watts(double noise_psd_dbm_hz, double band_width_hz) {
  return dbm_to_watts(noise_psd_dbm_hz) * band_width_hz;
}

double pathloss_gain(double intercept_db, double exponent, double d) {
  const double loss_db = intercept_db + 10.0 * exponent * std::log10(std::max(d, 1.0));
  return std::pow(10.0, -loss_db / 10.0);
}

NetworkRealization generate_realization(const ScenarioConfig& config,
                                        std::uint64_t realization_index) {
  validate(config);
  auto rng = make_stream(config.seed, realization_index);
  std::uniform_real_distribution<double> coord(0.0, config.side_length);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);

  NetworkRealization real;
  real.band_width = config.band_width();
  real.noise_power_per_band = noise_power_watts(config.noise_psd_dbm_hz, real.band_width);
  real.user_power_budget = dbm_to_watts(config.user_power_budget_dbm);

  // Draw order is part of the reproducibility contract: BSs, users, then links.
  real.bs_positions.reserve(config.num_bs);
  for (std::size_t b = 0; b < config.num_bs; ++b) {
    const double x = coord(rng);
    real.bs_positions.push_back({x, coord(rng)});
  }
  real.user_positions.reserve(config.num_users);
  for (std::size_t u = 0; u < config.num_users; ++u) {
    const double x = coord(rng);
    real.user_positions.push_back({x, coord(rng)});
  }

  const auto& ch = config.channel;
  const double fade_scale = 1.0 / std::sqrt(2.0);
  real.channel = ChannelTensor(config.num_users, config.num_bs, config.num_bands);
  for (std::size_t u = 0; u < config.num_users; ++u) {
    for (std::size_t b = 0; b < config.num_bs; ++b) {
      const double d = distance(real.user_positions[u], real.bs_positions[b]);
      const bool los = unit(rng) < std::exp(-ch.los_decay * d);
      const double intercept = los ? ch.pathloss_intercept_los : ch.pathloss_intercept_nlos;
      const double exponent = los ? ch.pathloss_exponent_los : ch.pathloss_exponent_nlos;
      const double sigma = los ? ch.shadowing_sigma_los : ch.shadowing_sigma_nlos;
      const double shadow_db = sigma * normal(rng);
      const double amplitude =
          std::sqrt(pathloss_gain(intercept, exponent, d) * std::pow(10.0, -shadow_db / 10.0));
      for (std::size_t k = 0; k < config.num_bands; ++k) {
        Complex fade{1.0, 0.0};
        if (ch.small_scale == SmallScale::rayleigh) {
          const double re = normal(rng);
          fade = Complex{re, normal(rng)} * fade_scale;
        }
        real.channel(u, b, k) = amplitude * fade;
      }
    }
  }
  return real;
}

}  // namespace vcsim::scenario
