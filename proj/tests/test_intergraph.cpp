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

#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "vcsim/intergraph.hpp"

using namespace vcsim;
using namespace vcsim::intergraph;

namespace {

clustering::VirtualCellPartition partition_of(std::vector<std::size_t> cell_of_bs) {
  clustering::VirtualCellPartition p;
  p.cell_of_bs = std::move(cell_of_bs);
  p.num_cells = *std::max_element(p.cell_of_bs.begin(), p.cell_of_bs.end()) + 1;
  p.bs_of_cell.resize(p.num_cells);
  p.users_of_cell.resize(p.num_cells);
  for (std::size_t b = 0; b < p.cell_of_bs.size(); ++b) p.bs_of_cell[p.cell_of_bs[b]].push_back(b);
  return p;
}

InterferenceGraph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) e.emplace_back(a, b);
  return make_graph(n, e);
}

}  // namespace

TEST_CASE("gamma_d = 0 gives no edges") {
  const std::vector<Point> pos{{0, 0}, {10, 0}, {20, 0}};
  const auto g = build_interference_graph(pos, partition_of({0, 1, 2}), std::vector<std::size_t>{3, 3, 3}, 0.0);
  CHECK(g.edges.empty());
  CHECK(g.num_vertices == 3);
}

TEST_CASE("edge conditions") {
  const std::vector<Point> pos{{0, 0}, {50, 0}};
  const std::vector<std::size_t> one_zero{1, 0};
  SUBCASE("same virtual cell") {
    CHECK(build_interference_graph(pos, partition_of({0, 0}), one_zero, 100).edges.empty());
  }
  SUBCASE("different cells, one served user suffices") {
    const auto g = build_interference_graph(pos, partition_of({0, 1}), one_zero, 100);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
  }
  SUBCASE("no users at either BS") {
    CHECK(build_interference_graph(pos, partition_of({0, 1}), std::vector<std::size_t>{0, 0}, 100).edges.empty());
  }
  SUBCASE("distance must be strictly below gamma_d") {
    CHECK(build_interference_graph(pos, partition_of({0, 1}), one_zero, 50).edges.empty());
    CHECK(build_interference_graph(pos, partition_of({0, 1}), one_zero, 50.0001).edges.size() == 1);
  }
}

TEST_CASE("graph invariants on random layouts") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 400);
  std::uniform_int_distribution<std::size_t> cell(0, 3), cnt(0, 2);
  for (int t = 0; t < 50; ++t) {
    std::vector<Point> pos;
    std::vector<std::size_t> cells, counts;
    for (int b = 0; b < 12; ++b) {
      const double x = u(rng);
      pos.push_back({x, u(rng)});
      cells.push_back(static_cast<std::size_t>(b) < 4 ? static_cast<std::size_t>(b) : cell(rng));
      counts.push_back(cnt(rng));
    }
    const auto p = partition_of(cells);
    const auto g = build_interference_graph(pos, p, counts, 150);
    for (auto [a, b] : g.edges) {
      CHECK(a < b);
      CHECK(p.cell_of_bs[a] != p.cell_of_bs[b]);
      CHECK(distance(pos[a], pos[b]) < 150);
      CHECK(counts[a] + counts[b] > 0);
    }
  }
}

TEST_CASE("make_graph normalises endpoint order") {
  const auto g1 = make_graph(4, {{0, 1}, {3, 2}, {1, 3}});
  const auto g2 = make_graph(4, {{1, 0}, {2, 3}, {3, 1}, {0, 1}});
  CHECK(g1.edges == g2.edges);
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), Error);
}

TEST_CASE("RLF on small graphs") {
  SUBCASE("triangle") {
    const auto c = color_graph(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(c.num_colors() == 3);
  }
  SUBCASE("no edges") {
    const auto c = color_graph(make_graph(5, {}));
    CHECK(c.num_colors() == 1);
    CHECK(c.groups[0] == std::vector<std::size_t>{0, 1, 2, 3, 4});
  }
  SUBCASE("path a-b-c seeds at b") {
    const auto c = color_graph(make_graph(3, {{0, 1}, {1, 2}}));
    CHECK(c.num_colors() == 2);
    CHECK(c.groups[0] == std::vector<std::size_t>{1});
    CHECK(c.groups[1] == std::vector<std::size_t>{0, 2});
  }
  SUBCASE("empty graph") {
    CHECK(color_graph(make_graph(0, {})).num_colors() == 0);
  }
}

TEST_CASE("RLF is proper, deterministic and within max degree + 1") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const auto g = random_graph(rng, 1 + t % 20, 0.1 + 0.8 * (t % 7) / 6.0);
    const auto c = color_graph(g);
    CHECK(is_proper(g, c));
    std::size_t max_deg = 0;
    for (const auto& row : g.adjacency()) max_deg = std::max(max_deg, row.size());
    CHECK(c.num_colors() <= max_deg + 1);
    const auto again = color_graph(g);
    CHECK(again.color_of == c.color_of);
    std::size_t members = 0;
    for (std::size_t col = 0; col < c.groups.size(); ++col)
      for (auto v : c.groups[col]) {
        CHECK(c.color_of[v] == col);
        ++members;
      }
    CHECK(members == g.num_vertices);
  }
}

TEST_CASE("RLF within one color of the chromatic number on <= 8 vertices") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(rng, 1 + t % 8, 0.2 + 0.6 * (t % 5) / 4.0);
    CHECK(color_graph(g).num_colors() <= oracle::chromatic_number(g.num_vertices, g.edges) + 1);
  }
}

TEST_CASE("edge list export") {
  auto g = make_graph(3, {{2, 0}});
  g.gamma_d = 70;
  CHECK(edge_list_text(g) == "# vertices 3 gamma_d 70\n0 2\n");
}
