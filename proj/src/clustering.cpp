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

#include "vcsim/clustering.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace vcsim::clustering {

SizeSchedule SizeSchedule::binary_tree(std::size_t num_bs) {
  SizeSchedule s;
  s.max_size.assign(num_bs + 1, 0);
  for (std::size_t m = 1; m <= num_bs; ++m) {
    std::size_t cap = 2;
    while (m * cap <= num_bs) cap *= 2;
    s.max_size[m] = std::min(cap, num_bs);
  }
  return s;
}

SizeSchedule SizeSchedule::unconstrained(std::size_t num_bs) {
  SizeSchedule s;
  s.max_size.assign(num_bs + 1, num_bs);
  s.max_size[0] = 0;
  return s;
}

const Partition& ClusterHierarchy::level(std::size_t m) const {
  if (m < 1 || m > num_bs)
    throw Error(ErrorCode::invalid_argument,
                "cluster count " + std::to_string(m) + " outside 1.." + std::to_string(num_bs));
  return levels[m];
}

std::vector<std::size_t> VirtualCellPartition::users_per_bs() const {
  std::vector<std::size_t> counts(cell_of_bs.size(), 0);
  for (auto b : serving_bs) ++counts[b];
  return counts;
}

double minimax_radius(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorCode::invalid_argument, "minimax radius of an empty set");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& center : points) {
    double r = 0.0;
    for (const auto& q : points) r = std::max(r, distance(center, q));
    best = std::min(best, r);
  }
  return best;
}

double minimax_linkage(std::span<const Point> a, std::span<const Point> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::invalid_argument, "minimax linkage of an empty set");
  std::vector<Point> joined(a.begin(), a.end());
  joined.insert(joined.end(), b.begin(), b.end());
  return minimax_radius(joined);
}

namespace {

struct Cluster {
  std::size_t id;
  Group members;
};

Partition canonical(const std::vector<Cluster>& clusters) {
  Partition p;
  p.reserve(clusters.size());
  for (const auto& c : clusters) p.push_back(c.members);
  std::sort(p.begin(), p.end(), [](const Group& x, const Group& y) { return x.front() < y.front(); });
  return p;
}

// Radius of the union computed straight from positions, no point copies.
double union_radius(std::span<const Point> pos, const Group& a, const Group& b) {
  double best = std::numeric_limits<double>::infinity();
  auto scan = [&](std::size_t center) {
    double r = 0.0;
    for (auto j : a) r = std::max(r, distance(pos[center], pos[j]));
    for (auto j : b) r = std::max(r, distance(pos[center], pos[j]));
    best = std::min(best, r);
  };
  for (auto i : a) scan(i);
  for (auto i : b) scan(i);
  return best;
}

}  // namespace

ClusterHierarchy build_hierarchy(std::span<const Point> bs_positions, const SizeSchedule& schedule) {
  const std::size_t n = bs_positions.size();
  if (n == 0) throw Error(ErrorCode::invalid_argument, "build_hierarchy needs at least one BS");
  if (schedule.max_size.size() < n + 1)
    throw Error(ErrorCode::invalid_argument, "size schedule shorter than the number of BSs");
  for (std::size_t m = 1; m < n; ++m) {
    if (schedule.max_size[m] * m < n)
      throw Error(ErrorCode::infeasible_schedule,
                  "size schedule infeasible at level m=" + std::to_string(m) + ": max size " +
                      std::to_string(schedule.max_size[m]) + " cannot cover " + std::to_string(n) + " BSs");
  }

  ClusterHierarchy h;
  h.num_bs = n;
  h.levels.resize(n + 1);
  std::vector<Cluster> clusters;
  for (std::size_t i = 0; i < n; ++i) clusters.push_back({i, {i}});
  h.levels[n] = canonical(clusters);

  std::size_t next_id = n;
  for (std::size_t m = n - 1; m >= 1; --m) {
    const std::size_t cap = schedule.max_size[m];
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    std::pair<std::size_t, std::size_t> best_key{n, n};
    bool found = false;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        if (clusters[i].members.size() + clusters[j].members.size() > cap) continue;
        const double link = union_radius(bs_positions, clusters[i].members, clusters[j].members);
        const auto lo = std::min(clusters[i].members.front(), clusters[j].members.front());
        const auto hi = std::max(clusters[i].members.front(), clusters[j].members.front());
        const std::pair<std::size_t, std::size_t> key{lo, hi};
        if (!found || link < best || (link == best && key < best_key)) {
          found = true;
          best = link;
          best_key = key;
          bi = i;
          bj = j;
        }
      }
    }
    if (!found)
      throw Error(ErrorCode::infeasible_schedule,
                  "size schedule infeasible at level m=" + std::to_string(m) +
                      ": no pair of clusters fits max size " + std::to_string(cap));

    Cluster merged{next_id++, {}};
    merged.members = clusters[bi].members;
    merged.members.insert(merged.members.end(), clusters[bj].members.begin(), clusters[bj].members.end());
    std::sort(merged.members.begin(), merged.members.end());
    h.merges.push_back({clusters[bi].id, clusters[bj].id, merged.id, best});
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bi));
    clusters.push_back(std::move(merged));
    for (const auto& c : clusters)
      if (c.members.size() > cap)
        throw Error(ErrorCode::infeasible_schedule,
                    "size schedule infeasible at level m=" + std::to_string(m) + ": a cluster of " +
                        std::to_string(c.members.size()) + " BSs from level m=" + std::to_string(m + 1) +
                        " exceeds max size " + std::to_string(cap));
    h.levels[m] = canonical(clusters);
    if (m == 1) break;
  }
  return h;
}

VirtualCellPartition affiliate_users(const scenario::NetworkRealization& real,
                                     const ClusterHierarchy& hierarchy, std::size_t m,
                                     AffiliationRule rule) {
  const auto& level = hierarchy.level(m);
  const std::size_t num_bs = real.num_bs();
  if (hierarchy.num_bs != num_bs)
    throw Error(ErrorCode::invalid_argument, "hierarchy and realization disagree on the number of BSs");

  VirtualCellPartition p;
  p.num_cells = m;
  p.bs_of_cell = level;
  p.users_of_cell.assign(m, {});
  p.cell_of_bs.assign(num_bs, 0);
  for (std::size_t v = 0; v < m; ++v)
    for (auto b : level[v]) p.cell_of_bs[b] = v;

  const auto& h = real.channel;
  const std::size_t bands = h.num_bands();
  p.serving_bs.resize(real.num_users());
  p.cell_of_user.resize(real.num_users());
  for (std::size_t u = 0; u < real.num_users(); ++u) {
    std::size_t best_bs = 0;
    double best = -1.0;
    for (std::size_t b = 0; b < num_bs; ++b) {
      double score = 0.0;
      for (std::size_t k = 0; k < bands; ++k) {
        if (rule == AffiliationRule::max_over_bands)
          score = std::max(score, std::abs(h(u, b, k)));
        else
          score += std::norm(h(u, b, k));
      }
      if (score > best) {
        best = score;
        best_bs = b;
      }
    }
    p.serving_bs[u] = best_bs;
    p.cell_of_user[u] = p.cell_of_bs[best_bs];
    p.users_of_cell[p.cell_of_user[u]].push_back(u);
  }
  return p;
}

std::string dendrogram_text(const ClusterHierarchy& hierarchy) {
  std::ostringstream out;
  out.precision(17);
  out << "# minimax-linkage dendrogram, " << hierarchy.num_bs << " BSs\n";
  for (const auto& mg : hierarchy.merges)
    out << "merge " << mg.first << ' ' << mg.second << " -> " << mg.merged << " height " << mg.height << '\n';
  for (std::size_t m = hierarchy.num_bs; m >= 1; --m) {
    out << "level " << m << ':';
    for (const auto& g : hierarchy.levels[m]) {
      out << " {";
      for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g[i];
      out << '}';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace vcsim::clustering
