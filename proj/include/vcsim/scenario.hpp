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

#pragma once

#include <cstdint>

#include "vcsim/types.hpp"

namespace vcsim::scenario {

enum class SmallScale { rayleigh, none };

// Log-distance LOS/NLOS model with log-normal shadowing. Path loss in dB is
// intercept + 10 * exponent * log10(d), d clamped to >= 1 m.
struct ChannelParams {
  double pathloss_intercept_los = 61.4;
  double pathloss_exponent_los = 2.0;
  double pathloss_intercept_nlos = 72.0;
  double pathloss_exponent_nlos = 2.92;
  double shadowing_sigma_los = 5.8;
  double shadowing_sigma_nlos = 8.7;
  double los_decay = 1.0 / 67.1;  // P(LOS) = exp(-los_decay * d)
  SmallScale small_scale = SmallScale::rayleigh;
};

struct ScenarioConfig {
  std::size_t num_bs = 20;
  std::size_t num_users = 200;
  double side_length = 400.0;       // m
  std::size_t num_bands = 24;
  double total_bandwidth = 5.0e6;   // Hz
  double carrier_freq = 28.0e9;     // Hz, informational; the fits above are per-carrier
  double noise_psd_dbm_hz = -174.0;
  double user_power_budget_dbm = 23.0;
  ChannelParams channel;
  std::uint64_t seed = 1;

  double band_width() const { return total_bandwidth / static_cast<double>(num_bands); }
};

struct NetworkRealization {
  std::vector<Point> bs_positions;
  std::vector<Point> user_positions;
  ChannelTensor channel;            // h[u][b][k], linear amplitude
  double noise_power_per_band = 0;  // W
  double band_width = 0;            // Hz
  double user_power_budget = 0;     // W

  std::size_t num_bs() const { return bs_positions.size(); }
  std::size_t num_users() const { return user_positions.size(); }
  std::size_t num_bands() const { return channel.num_bands(); }
};

/// Throws Error(invalid_argument) naming the first violated constraint.
void validate(const ScenarioConfig& config);

double dbm_to_watts(double dbm);

/// Noise power over one band in watts for a PSD given in dBm/Hz.
double noise_power_watts(double noise_psd_dbm_hz, double band_width_hz);

/// Deterministic (no shadowing, no fading) linear power gain at distance d.
double pathloss_gain(double intercept_db, double exponent, double d);

NetworkRealization generate_realization(const ScenarioConfig& config,
                                        std::uint64_t realization_index);

}  // namespace vcsim::scenario
