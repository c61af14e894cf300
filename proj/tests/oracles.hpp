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

// Independent brute-force oracles shared by the unit and acceptance suites.
// Nothing here calls into the code paths it is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

struct Pt {
  double x, y;
};

inline double dist(Pt a, Pt b) { return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y)); }

// Minimax radius straight from the definition over index sets.
inline double radius(const std::vector<Pt>& pts, const std::set<std::size_t>& s) {
  double best = std::numeric_limits<double>::infinity();
  for (auto c : s) {
    double r = 0;
    for (auto j : s) r = std::max(r, dist(pts[c], pts[j]));
    best = std::min(best, r);
  }
  return best;
}

// Greedy agglomeration enumerating every admissible cluster pair per step.
// Returns levels[m] as sorted vectors of sorted groups; empty on infeasibility.
inline std::vector<std::vector<std::vector<std::size_t>>> greedy_levels(const std::vector<Pt>& pts,
                                                                        const std::vector<std::size_t>& caps) {
  const std::size_t n = pts.size();
  std::vector<std::set<std::size_t>> clusters;
  for (std::size_t i = 0; i < n; ++i) clusters.push_back({i});
  std::vector<std::vector<std::vector<std::size_t>>> levels(n + 1);
  auto snapshot = [&] {
    std::vector<std::vector<std::size_t>> out;
    for (auto& c : clusters) out.emplace_back(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
  };
  levels[n] = snapshot();
  for (std::size_t m = n - 1; m >= 1; --m) {
    double best = std::numeric_limits<double>::infinity();
    std::pair<std::size_t, std::size_t> best_key{n, n};
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (std::size_t j = 0; j < clusters.size(); ++j) {
        if (i == j) continue;
        if (clusters[i].size() + clusters[j].size() > caps[m]) continue;
        auto u = clusters[i];
        u.insert(clusters[j].begin(), clusters[j].end());
        const double d = radius(pts, u);
        std::pair<std::size_t, std::size_t> key{std::min(*clusters[i].begin(), *clusters[j].begin()),
                                                std::max(*clusters[i].begin(), *clusters[j].begin())};
        if (d < best || (d == best && key < best_key)) {
          best = d;
          best_key = key;
          bi = i;
          bj = j;
        }
      }
    if (bi == n) return {};
    clusters[bi].insert(clusters[bj].begin(), clusters[bj].end());
    clusters.erase(clusters.begin() + static_cast<long>(bj));
    for (auto& c : clusters)
      if (c.size() > caps[m]) return {};
    levels[m] = snapshot();
    if (m == 1) break;
  }
  return levels;
}

// Exact chromatic number by trying k = 1, 2, ... with backtracking.
inline std::size_t chromatic_number(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n == 0) return 0;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
  std::vector<int> color(n, -1);
  std::function<bool(std::size_t, int)> place = [&](std::size_t v, int k) -> bool {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (std::size_t w = 0; w < v; ++w)
        if (adj[v][w] && color[w] == c) ok = false;
      if (!ok) continue;
      color[v] = c;
      if (place(v + 1, k)) return true;
    }
    color[v] = -1;
    return false;
  };
  for (int k = 1;; ++k)
    if (place(0, k)) return static_cast<std::size_t>(k);
}

// Sort-based closed-form water-filling (different algorithm from bisection).
inline std::vector<double> waterfill_sorted(const std::vector<double>& gains, double budget) {
  std::vector<double> p(gains.size(), 0.0);
  std::vector<std::pair<double, std::size_t>> floors;
  for (std::size_t k = 0; k < gains.size(); ++k)
    if (gains[k] > 0) floors.push_back({1.0 / gains[k], k});
  if (floors.empty() || budget <= 0) return p;
  std::sort(floors.begin(), floors.end());
  double level = 0;
  double prefix = 0;
  std::size_t active = 0;
  for (std::size_t i = 0; i < floors.size(); ++i) {
    prefix += floors[i].first;
    const double candidate = (budget + prefix) / static_cast<double>(i + 1);
    if (i + 1 < floors.size() && candidate > floors[i + 1].first) continue;
    level = candidate;
    active = i + 1;
    break;
  }
  for (std::size_t i = 0; i < active; ++i) p[floors[i].second] = std::max(0.0, level - floors[i].first);
  return p;
}

// log2 det via LU determinant, no Cholesky.
inline double log2_det(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 0.0;
  return std::log2(std::abs(m.determinant()));
}

// sum_k W log2 det(I + sum_u p_uk h_uk h_uk^H / s) written out directly.
// channels[k] is (bs x users); power is (users x bands).
inline double sum_capacity(const std::vector<Eigen::MatrixXcd>& channels, const Eigen::MatrixXd& power,
                           double noise, double W) {
  double total = 0;
  for (std::size_t k = 0; k < channels.size(); ++k) {
    const auto& h = channels[k];
    if (h.rows() == 0) continue;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(h.rows(), h.rows());
    for (Eigen::Index u = 0; u < h.cols(); ++u)
      m += power(u, static_cast<Eigen::Index>(k)) / noise * h.col(u) * h.col(u).adjoint();
    total += W * log2_det(m);
  }
  return total;
}

inline Eigen::MatrixXcd random_channels(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols, double scale) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::MatrixXcd h(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) h(r, c) = std::complex<double>(nd(rng), nd(rng)) * scale;
  return h;
}

// All compositions of `steps` into `parts` non-negative integers.
inline void compositions(std::size_t parts, std::size_t steps, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> c(parts, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
    if (i + 1 == parts) {
      c[i] = left;
      f(c);
      return;
    }
    for (std::size_t x = 0; x <= left; ++x) {
      c[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (parts == 0) return;
  rec(0, steps);
}

}  // namespace oracle
