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

#include "vcsim/freqalloc.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace vcsim::freqalloc {

namespace {

// Exact rational a / b with b > 0.
struct Ratio {
  std::uint64_t num;
  std::uint64_t den;
};

bool greater(const Ratio& x, const Ratio& y) {
  return static_cast<unsigned __int128>(x.num) * y.den > static_cast<unsigned __int128>(y.num) * x.den;
}

}  // namespace

std::vector<std::size_t> allocate_group_bands(std::span<const std::size_t> user_counts,
                                              std::size_t num_bands, Denominator rule) {
  const std::size_t groups = user_counts.size();
  if (groups == 0) throw Error(ErrorCode::invalid_argument, "band allocation needs at least one group");
  const std::size_t total = std::accumulate(user_counts.begin(), user_counts.end(), std::size_t{0});
  std::vector<std::size_t> f(groups, 0);
  if (total == 0) {
    f[0] = num_bands;
    return f;
  }
  const auto served = static_cast<std::size_t>(
      std::count_if(user_counts.begin(), user_counts.end(), [](std::size_t n) { return n > 0; }));
  if (num_bands < served)
    throw Error(ErrorCode::invalid_argument, std::to_string(served) + " groups with users but only " +
                                                 std::to_string(num_bands) + " bands");
  if (groups == 1) {
    f[0] = num_bands;
    return f;
  }

  // f~_l = K n_l / den_l kept as exact rationals.
  std::vector<std::size_t> ceilings(groups);
  std::vector<Ratio> remainders(groups);
  bool integral = true;
  for (std::size_t l = 0; l < groups; ++l) {
    const std::uint64_t num = static_cast<std::uint64_t>(num_bands) * user_counts[l];
    std::uint64_t den = total;
    if (rule == Denominator::others) den = total - user_counts[l];
    if (den == 0) {
      // Only this group has users under the literal rule.
      std::fill(f.begin(), f.end(), 0);
      f[l] = num_bands;
      return f;
    }
    ceilings[l] = static_cast<std::size_t>((num + den - 1) / den);
    remainders[l] = {ceilings[l] * den - num, den};
    if (num % den != 0) integral = false;
  }

  const std::size_t ceil_sum = std::accumulate(ceilings.begin(), ceilings.end(), std::size_t{0});
  if (integral && ceil_sum == num_bands) return ceilings;

  std::size_t excess = ceil_sum - num_bands;  // delta_f; ceil_sum >= num_bands
  std::vector<std::size_t> order(groups);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return greater(remainders[a], remainders[b]); });

  f = ceilings;
  // First pass subtracts one from each eligible group in remainder order; later
  // passes repeat over the same order while groups stay above one band.
  while (excess > 0) {
    bool progressed = false;
    for (auto l : order) {
      if (excess == 0) break;
      if (f[l] > 1) {
        --f[l];
        --excess;
        progressed = true;
      }
    }
    if (!progressed)
      throw Error(ErrorCode::internal, "band rounding cannot reach the band count without starving a group");
  }
  return f;
}

std::vector<BandSet> assign_bs_bands(const intergraph::Coloring& coloring,
                                     std::span<const std::size_t> group_band_counts) {
  if (group_band_counts.size() != coloring.groups.size())
    throw Error(ErrorCode::invalid_argument, "one band count per color group required");
  std::vector<BandSet> bands(coloring.color_of.size());
  std::size_t start = 0;
  for (std::size_t l = 0; l < coloring.groups.size(); ++l) {
    BandSet range(group_band_counts[l]);
    std::iota(range.begin(), range.end(), start);
    start += group_band_counts[l];
    for (auto b : coloring.groups[l]) bands[b] = range;
  }
  return bands;
}

std::vector<BandSet> assign_user_bands(const scenario::NetworkRealization& real,
                                       const clustering::VirtualCellPartition& partition,
                                       std::span<const BandSet> bands_of_bs, double gamma_d) {
  const std::size_t num_bands = real.num_bands();
  std::vector<BandSet> out(real.num_users());
  std::vector<char> blocked(num_bands);
  for (std::size_t u = 0; u < real.num_users(); ++u) {
    const std::size_t b = partition.serving_bs[u];
    std::fill(blocked.begin(), blocked.end(), 0);
    for (std::size_t other = 0; other < real.num_bs(); ++other) {
      if (partition.cell_of_bs[other] == partition.cell_of_bs[b]) continue;
      if (!(distance(real.bs_positions[b], real.bs_positions[other]) < gamma_d)) continue;
      if (!(distance(real.user_positions[u], real.bs_positions[other]) < gamma_d)) continue;
      for (auto k : bands_of_bs[other]) blocked[k] = 1;
    }
    for (std::size_t k = 0; k < num_bands; ++k)
      if (!blocked[k]) out[u].push_back(k);
  }
  return out;
}

FrequencyPlan plan_frequencies(const scenario::NetworkRealization& real,
                               const clustering::VirtualCellPartition& partition,
                               const intergraph::Coloring& coloring, double gamma_d, Denominator rule) {
  FrequencyPlan plan;
  const auto per_bs = partition.users_per_bs();
  plan.group_user_counts.assign(coloring.num_colors(), 0);
  for (std::size_t b = 0; b < per_bs.size(); ++b) plan.group_user_counts[coloring.color_of[b]] += per_bs[b];
  plan.group_band_counts = allocate_group_bands(plan.group_user_counts, real.num_bands(), rule);
  plan.bands_of_bs = assign_bs_bands(coloring, plan.group_band_counts);
  plan.bands_of_user = assign_user_bands(real, partition, plan.bands_of_bs, gamma_d);
  return plan;
}

std::string plan_csv(const FrequencyPlan& plan) {
  std::ostringstream out;
  out << "kind,id,bands\n";
  for (std::size_t b = 0; b < plan.bands_of_bs.size(); ++b) {
    const auto& s = plan.bands_of_bs[b];
    out << "bs," << b << ',';
    if (!s.empty()) out << s.front() << '-' << s.back();
    out << '\n';
  }
  for (std::size_t u = 0; u < plan.bands_of_user.size(); ++u) {
    out << "user," << u << ',';
    for (std::size_t i = 0; i < plan.bands_of_user[u].size(); ++i) out << (i ? " " : "") << plan.bands_of_user[u][i];
    out << '\n';
  }
  return out.str();
}

}  // namespace vcsim::freqalloc
