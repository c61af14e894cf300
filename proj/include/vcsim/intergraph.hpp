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
#include <utility>

#include "vcsim/clustering.hpp"

namespace vcsim::intergraph {

struct InterferenceGraph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (a, b) with a < b, sorted
  double gamma_d = 0.0;

  bool has_edge(std::size_t a, std::size_t b) const;
  std::vector<std::vector<std::size_t>> adjacency() const;
};

struct Coloring {
  std::vector<std::size_t> color_of;               // per vertex
  std::vector<std::vector<std::size_t>> groups;    // groups[c] sorted vertex ids

  std::size_t num_colors() const { return groups.size(); }
};

/// Edge {b1, b2} iff the BSs are in different virtual cells, closer than
/// gamma_d (strict), and at least one of them is some user's best BS.
InterferenceGraph build_interference_graph(std::span<const Point> bs_positions,
                                           const clustering::VirtualCellPartition& partition,
                                           std::span<const std::size_t> user_counts, double gamma_d);

/// Graph from an explicit edge list; endpoints are normalised and deduplicated.
InterferenceGraph make_graph(std::size_t num_vertices,
                             std::vector<std::pair<std::size_t, std::size_t>> edges);

/// Recursive Largest First coloring, ties broken toward the smallest vertex.
Coloring color_graph(const InterferenceGraph& g);

bool is_proper(const InterferenceGraph& g, const Coloring& c);

/// "# vertices N gamma_d G" header then one "a b" line per edge.
std::string edge_list_text(const InterferenceGraph& g);

}  // namespace vcsim::intergraph
