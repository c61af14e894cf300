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

#include "vcsim/scenario.hpp"

namespace vcsim::clustering {

using Group = std::vector<std::size_t>;   // sorted BS (or user) indices
using Partition = std::vector<Group>;     // groups ordered by smallest member

/// Maximal cluster size per cluster count. max_size[m] applies to the level
/// with m clusters; index 0 is unused.
struct SizeSchedule {
  std::vector<std::size_t> max_size;

  /// s_m = min(n, 2^j), j >= 1 smallest with m * 2^j > n. For 20 BSs this is
  /// 2 (m >= 11), 4 (6..10), 8 (3..5), 16 (m = 2), 20 (m = 1).
  static SizeSchedule binary_tree(std::size_t num_bs);
  static SizeSchedule unconstrained(std::size_t num_bs);

  std::size_t at(std::size_t m) const { return max_size.at(m); }
};

struct Merge {
  std::size_t first;   // cluster ids; singletons are 0..n-1, merges n, n+1, ...
  std::size_t second;
  std::size_t merged;
  double height;       // minimax linkage at which the merge happened
};

struct ClusterHierarchy {
  std::size_t num_bs = 0;
  std::vector<Merge> merges;     // n - 1 merges, singletons down to one cluster
  std::vector<Partition> levels; // levels[m] for m = 1..n; levels[0] empty

  const Partition& level(std::size_t m) const;
};

enum class AffiliationRule { max_over_bands, mean_power };

struct VirtualCellPartition {
  std::size_t num_cells = 0;
  std::vector<Group> bs_of_cell;
  std::vector<Group> users_of_cell;
  std::vector<std::size_t> serving_bs;   // per user
  std::vector<std::size_t> cell_of_bs;
  std::vector<std::size_t> cell_of_user;

  /// Number of users whose best BS is b, for every b.
  std::vector<std::size_t> users_per_bs() const;
};

double minimax_radius(std::span<const Point> points);
double minimax_linkage(std::span<const Point> a, std::span<const Point> b);

/// Size-constrained agglomerative clustering with minimax linkage. Each step
/// merges the admissible pair with the smallest linkage; ties go to the
/// lexicographically smallest (min member, min member) pair. Throws
/// Error(infeasible_schedule) naming the level when no pair fits.
ClusterHierarchy build_hierarchy(std::span<const Point> bs_positions,
                                 const SizeSchedule& schedule);

/// Best-channel affiliation of every user, then grouping into the m virtual
/// cells of the hierarchy.
VirtualCellPartition affiliate_users(const scenario::NetworkRealization& real,
                                     const ClusterHierarchy& hierarchy, std::size_t m,
                                     AffiliationRule rule = AffiliationRule::max_over_bands);

/// Text dendrogram: one "merge <first> <second> -> <merged> height <h>" line
/// per merge followed by the member list of every level.
std::string dendrogram_text(const ClusterHierarchy& hierarchy);

}  // namespace vcsim::clustering
