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

#include <string>

#include "vcsim/harness.hpp"

namespace vcsim::config {

/// INI-style file. Scenario keys are top level; [channel_params],
/// [clustering], [freqalloc], [powalloc] and [sweep] are optional sections.
/// Unknown keys are rejected. Missing keys keep their defaults.
harness::SweepConfig load_sweep_config(const std::string& path);
harness::SweepConfig parse_sweep_config(const std::string& text);

std::vector<double> parse_double_list(const std::string& text);
std::vector<std::size_t> parse_count_list(const std::string& text);

}  // namespace vcsim::config
