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

#include <span>
#include <string>

#include "vcsim/intergraph.hpp"

namespace vcsim::freqalloc {

enum class Denominator {
  total,   // f~_l = |K| n_l / sum_i n_i
  others,  // f~_l = |K| n_l / sum_{i != l} n_i
};

struct FrequencyPlan {
  std::vector<BandSet> bands_of_bs;
  std::vector<BandSet> bands_of_user;
  std::vector<std::size_t> group_band_counts;  // f_1..f_kappa, color-id order
  std::vector<std::size_t> group_user_counts;  // n_1..n_kappa
};

/// Proportional split of num_bands over groups with ceiling-and-remainder
/// rounding. Result sums to num_bands and every group with users gets >= 1
/// band. All-zero counts give every band to the first group.
std::vector<std::size_t> allocate_group_bands(std::span<const std::size_t> user_counts,
                                              std::size_t num_bands,
                                              Denominator rule = Denominator::total);

/// Group l receives the contiguous range after all earlier groups' ranges.
std::vector<BandSet> assign_bs_bands(const intergraph::Coloring& coloring,
                                     std::span<const std::size_t> group_band_counts);

/// K_u = K minus the bands of every foreign BS within gamma_d of both the
/// user and its serving BS.
std::vector<BandSet> assign_user_bands(const scenario::NetworkRealization& real,
                                       const clustering::VirtualCellPartition& partition,
                                       std::span<const BandSet> bands_of_bs, double gamma_d);

/// Whole frequency stage: group user counts, band counts, K_b and K_u.
FrequencyPlan plan_frequencies(const scenario::NetworkRealization& real,
                               const clustering::VirtualCellPartition& partition,
                               const intergraph::Coloring& coloring, double gamma_d,
                               Denominator rule = Denominator::total);

/// CSV rows "bs,<id>,<first>-<last>" (blank when empty) and
/// "user,<id>,<space separated bands>".
std::string plan_csv(const FrequencyPlan& plan);

}  // namespace vcsim::freqalloc
