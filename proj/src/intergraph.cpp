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

#include "vcsim/intergraph.hpp"

#include <algorithm>
#include <sstream>

namespace vcsim::intergraph {

bool InterferenceGraph::has_edge(std::size_t a, std::size_t b) const {
  const auto key = std::minmax(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::pair{key.first, key.second});
}

std::vector<std::vector<std::size_t>> InterferenceGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(num_vertices);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

InterferenceGraph make_graph(std::size_t num_vertices,
                             std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (auto& e : edges) {
    if (e.first >= num_vertices || e.second >= num_vertices)
      throw Error(ErrorCode::invalid_argument, "edge endpoint out of range");
    if (e.first == e.second) throw Error(ErrorCode::invalid_argument, "self-loop in interference graph");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return InterferenceGraph{num_vertices, std::move(edges), 0.0};
}

InterferenceGraph build_interference_graph(std::span<const Point> bs_positions,
                                           const clustering::VirtualCellPartition& partition,
                                           std::span<const std::size_t> user_counts, double gamma_d) {
  const std::size_t n = bs_positions.size();
  if (user_counts.size() != n || partition.cell_of_bs.size() != n)
    throw Error(ErrorCode::invalid_argument, "interference graph inputs disagree on the number of BSs");
  InterferenceGraph g;
  g.num_vertices = n;
  g.gamma_d = gamma_d;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (partition.cell_of_bs[a] == partition.cell_of_bs[b]) continue;
      if (!(distance(bs_positions[a], bs_positions[b]) < gamma_d)) continue;
      if (user_counts[a] + user_counts[b] == 0) continue;
      g.edges.emplace_back(a, b);
    }
  }
  return g;
}

Coloring color_graph(const InterferenceGraph& g) {
  const std::size_t n = g.num_vertices;
  const auto adj = g.adjacency();
  Coloring c;
  c.color_of.assign(n, 0);

  enum class State { uncolored, candidate, forbidden, colored };
  std::vector<State> state(n, State::uncolored);
  std::size_t remaining = n;

  auto count_neighbors = [&](std::size_t v, State s) {
    return static_cast<std::size_t>(
        std::count_if(adj[v].begin(), adj[v].end(), [&](std::size_t w) { return state[w] == s; }));
  };

  while (remaining > 0) {
    // Seed: max degree in the uncolored subgraph.
    std::size_t seed = n;
    std::size_t seed_degree = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (state[v] != State::uncolored) continue;
      const auto d = count_neighbors(v, State::uncolored);
      if (seed == n || d > seed_degree) {
        seed = v;
        seed_degree = d;
      }
    }

    const std::size_t color = c.groups.size();
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < n; ++v)
      if (state[v] == State::uncolored) state[v] = State::candidate;

    auto take = [&](std::size_t v) {
      state[v] = State::colored;
      c.color_of[v] = color;
      members.push_back(v);
      for (auto w : adj[v])
        if (state[w] == State::candidate) state[w] = State::forbidden;
    };
    take(seed);

    for (;;) {
      std::size_t pick = n;
      std::size_t pick_score = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (state[v] != State::candidate) continue;
        const auto s = count_neighbors(v, State::forbidden);
        if (pick == n || s > pick_score) {
          pick = v;
          pick_score = s;
        }
      }
      if (pick == n) break;
      take(pick);
    }

    for (auto& s : state)
      if (s == State::forbidden) s = State::uncolored;
    remaining -= members.size();
    std::sort(members.begin(), members.end());
    c.groups.push_back(std::move(members));
  }
  return c;
}

bool is_proper(const InterferenceGraph& g, const Coloring& c) {
  if (c.color_of.size() != g.num_vertices) return false;
  for (auto [a, b] : g.edges)
    if (c.color_of[a] == c.color_of[b]) return false;
  return true;
}

std::string edge_list_text(const InterferenceGraph& g) {
  std::ostringstream out;
  out.precision(17);
  out << "# vertices " << g.num_vertices << " gamma_d " << g.gamma_d << '\n';
  for (auto [a, b] : g.edges) out << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace vcsim::intergraph
