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
#include "vcsim/powalloc.hpp"

using namespace vcsim;
using namespace vcsim::powalloc;

namespace {

CellPowerProblem random_problem(std::mt19937_64& rng, std::size_t users, std::size_t bands, std::size_t bss,
                                double noise = 1.0, bool random_masks = true) {
  CellPowerProblem pr;
  pr.num_bands = bands;
  pr.band_width = 1.0;
  pr.noise_power = noise;
  pr.budget.assign(users, 1.0);
  std::bernoulli_distribution coin(0.8);
  std::uniform_int_distribution<std::size_t> dim(0, bss);
  pr.allowed.assign(users, std::vector<char>(bands, 1));
  for (std::size_t u = 0; u < users; ++u) {
    pr.users.push_back(u);
    if (random_masks)
      for (std::size_t k = 0; k < bands; ++k) pr.allowed[u][k] = coin(rng);
  }
  for (std::size_t k = 0; k < bands; ++k) {
    const auto d = random_masks ? dim(rng) : bss;
    pr.listening.emplace_back(d);
    std::iota(pr.listening.back().begin(), pr.listening.back().end(), std::size_t{0});
    pr.channels.push_back(oracle::random_channels(rng, static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(users), 2.0));
  }
  return pr;
}

double total_power(const PowerMatrix& p, Eigen::Index u) { return p.row(u).sum(); }

}  // namespace

TEST_CASE("single-user water-filling examples") {
  SUBCASE("one band takes the whole budget") {
    const std::vector<double> g{3.0};
    const auto wf = waterfill_single_user(g, 0.7);
    CHECK(wf.power[0] == doctest::Approx(0.7).epsilon(1e-14));
  }
  SUBCASE("equal gains split evenly") {
    const std::vector<double> g{2.0, 2.0};
    const auto wf = waterfill_single_user(g, 1.0);
    CHECK(wf.power[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(wf.power[1] == doctest::Approx(0.5).epsilon(1e-12));
  }
  SUBCASE("gains (2, 1) with 1 W") {
    const std::vector<double> g{2.0, 1.0};
    const auto wf = waterfill_single_user(g, 1.0);
    CHECK(wf.power[0] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(wf.power[1] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(wf.level == doctest::Approx(1.25).epsilon(1e-12));
    // Grid maximisation of log2(1 + 2 p) + log2(1 + (1 - p)) at 1e-4 steps.
    double best = -1, arg = 0;
    for (int i = 0; i <= 10000; ++i) {
      const double p = i * 1e-4;
      const double v = std::log2(1 + 2 * p) + std::log2(1 + (1 - p));
      if (v > best) {
        best = v;
        arg = p;
      }
    }
    CHECK(std::abs(arg - wf.power[0]) <= 1e-4);
  }
  SUBCASE("zero gains and zero budget give zeros") {
    const std::vector<double> zero{0.0, 0.0};
    for (double p : waterfill_single_user(zero, 1.0).power) CHECK(p == 0.0);
    const std::vector<double> g{1.0, 4.0};
    for (double p : waterfill_single_user(g, 0.0).power) CHECK(p == 0.0);
  }
  SUBCASE("weak band stays dry") {
    const std::vector<double> g{10.0, 0.01};
    const auto wf = waterfill_single_user(g, 1.0);
    CHECK(wf.power[0] == doctest::Approx(1.0));
    CHECK(wf.power[1] == 0.0);
  }
}

TEST_CASE("bisection water-filling matches the sorted closed form") {
  std::mt19937_64 rng(21);
  std::exponential_distribution<double> ex(1.0);
  std::bernoulli_distribution zero(0.2);
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> g(1 + t % 10);
    for (auto& x : g) x = zero(rng) ? 0.0 : ex(rng) * std::pow(10.0, t % 5 - 2);
    const double budget = 0.01 + ex(rng);
    const auto wf = waterfill_single_user(g, budget);
    const auto ref = oracle::waterfill_sorted(g, budget);
    double sum = 0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      CHECK(wf.power[k] == doctest::Approx(ref[k]).epsilon(1e-9).scale(budget));
      CHECK(wf.power[k] >= 0.0);
      sum += wf.power[k];
    }
    if (std::any_of(g.begin(), g.end(), [](double x) { return x > 0; }))
      CHECK(sum == doctest::Approx(budget).epsilon(1e-12));
  }
}

TEST_CASE("solve_cell edge cases") {
  std::mt19937_64 rng(1);
  SUBCASE("single user equals single-user water-filling on h^H h / sigma^2") {
    auto pr = random_problem(rng, 1, 5, 3, 0.5, false);
    const auto sol = solve_cell(pr);
    CHECK(sol.converged);
    std::vector<double> g;
    for (const auto& h : pr.channels) g.push_back(h.col(0).squaredNorm() / pr.noise_power);
    const auto ref = waterfill_single_user(g, 1.0);
    for (std::size_t k = 0; k < 5; ++k) CHECK(sol.power(0, static_cast<Eigen::Index>(k)) == doctest::Approx(ref.power[k]).epsilon(1e-12));
  }
  SUBCASE("no users") {
    auto pr = random_problem(rng, 0, 3, 2);
    const auto sol = solve_cell(pr);
    CHECK(sol.power.size() == 0);
    CHECK(sol.objective == 0.0);
    CHECK(sol.converged);
  }
  SUBCASE("user without allowed bands stays silent") {
    auto pr = random_problem(rng, 2, 3, 2, 1.0, false);
    std::fill(pr.allowed[1].begin(), pr.allowed[1].end(), 0);
    const auto sol = solve_cell(pr);
    CHECK(total_power(sol.power, 1) == 0.0);
    CHECK(total_power(sol.power, 0) == doctest::Approx(1.0));
  }
  SUBCASE("bands nobody listens to carry no power") {
    auto pr = random_problem(rng, 2, 3, 2, 1.0, false);
    pr.channels[1].resize(0, 2);
    pr.listening[1].clear();
    const auto sol = solve_cell(pr);
    CHECK(sol.power(0, 1) == 0.0);
    CHECK(sol.power(1, 1) == 0.0);
  }
}

TEST_CASE("2 users x 2 bands x 1 BS against an exhaustive grid") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 5; ++t) {
    auto pr = random_problem(rng, 2, 2, 1, 1.0, false);
    const auto sol = solve_cell(pr);
    REQUIRE(sol.converged);
    double best = 0;
    Eigen::MatrixXd p(2, 2);
    for (int i = 0; i <= 1000; ++i)
      for (int j = 0; j <= 1000; ++j) {
        p << i * 1e-3, 1 - i * 1e-3, j * 1e-3, 1 - j * 1e-3;
        best = std::max(best, oracle::sum_capacity(pr.channels, p, pr.noise_power, pr.band_width));
      }
    CHECK(std::abs(sol.objective - best) <= 1e-4 * best);
  }
}

TEST_CASE("cell objective") {
  std::mt19937_64 rng(5);
  auto pr = random_problem(rng, 3, 4, 3, 0.3, false);
  CHECK(cell_objective(pr, PowerMatrix::Zero(3, 4)) == 0.0);

  PowerMatrix p = PowerMatrix::Random(3, 4).cwiseAbs();
  const double ref = oracle::sum_capacity(pr.channels, p, pr.noise_power, pr.band_width);
  CHECK(std::abs(cell_objective(pr, p) - ref) <= 1e-9 * ref);

  // Scalar case: W log2(1 + p |h|^2 / sigma^2).
  CellPowerProblem s;
  s.users = {0};
  s.num_bands = 1;
  s.band_width = 180e3;
  s.noise_power = 2e-15;
  s.budget = {0.2};
  s.allowed = {{1}};
  s.listening = {{0}};
  s.channels = {Eigen::MatrixXcd::Constant(1, 1, Complex{3e-7, -1e-7})};
  PowerMatrix q(1, 1);
  q << 0.2;
  const double expected = 180e3 * std::log2(1 + 0.2 * 1e-13 / 2e-15);
  CHECK(cell_objective(s, q) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("best-response cycles never decrease the objective and stay feasible") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 40; ++t) {
    auto pr = random_problem(rng, 2 + t % 5, 1 + t % 8, 1 + t % 4);
    SolveOptions opt;
    opt.record_trace = true;
    const auto sol = solve_cell(pr, opt);
    for (std::size_t i = 1; i < sol.objective_trace.size(); ++i)
      CHECK(sol.objective_trace[i] >= sol.objective_trace[i - 1] - 1e-12 * std::abs(sol.objective_trace[i - 1]));
    for (Eigen::Index u = 0; u < sol.power.rows(); ++u) {
      CHECK(total_power(sol.power, u) <= pr.budget[static_cast<std::size_t>(u)] + 1e-9);
      for (Eigen::Index k = 0; k < sol.power.cols(); ++k) {
        CHECK(sol.power(u, k) >= 0.0);
        if (!pr.allowed[static_cast<std::size_t>(u)][static_cast<std::size_t>(k)]) CHECK(sol.power(u, k) == 0.0);
      }
    }
  }
}

TEST_CASE("KKT water level at convergence") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    auto pr = random_problem(rng, 1 + t % 5, 1 + t % 8, 1 + t % 3);
    const auto sol = solve_cell(pr);
    REQUIRE(sol.converged);
    for (std::size_t u = 0; u < pr.num_users(); ++u) {
      const auto g = effective_gains(pr, sol.power, u);
      double level = -1;
      for (std::size_t k = 0; k < pr.num_bands; ++k) {
        const double p = sol.power(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(k));
        if (p > 0) {
          const double l = 1.0 / g[k] + p;
          if (level < 0) level = l;
          CHECK(l == doctest::Approx(level).epsilon(1e-6));
        }
      }
      if (level < 0) continue;
      CHECK(total_power(sol.power, static_cast<Eigen::Index>(u)) == doctest::Approx(pr.budget[u]).epsilon(1e-9));
      for (std::size_t k = 0; k < pr.num_bands; ++k)
        if (sol.power(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(k)) == 0 && g[k] > 0)
          CHECK(1.0 / g[k] >= level * (1 - 1e-6));
    }
  }
}

TEST_CASE("scaling noise and channel power together leaves the allocation unchanged") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    auto pr = random_problem(rng, 3, 5, 2);
    auto scaled = pr;
    scaled.noise_power *= 2;
    for (auto& h : scaled.channels) h *= std::sqrt(2.0);
    const auto a = solve_cell(pr);
    const auto b = solve_cell(scaled);
    CHECK((a.power - b.power).cwiseAbs().maxCoeff() <= 1e-9);
    CHECK(a.objective == doctest::Approx(b.objective).epsilon(1e-9));
  }
}

TEST_CASE("cell problem restricts channel vectors to listening BSs") {
  scenario::NetworkRealization real;
  real.bs_positions = {{0, 0}, {1, 0}, {2, 0}};
  real.user_positions = {{0, 1}, {2, 1}};
  real.channel = ChannelTensor(2, 3, 3);
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t k = 0; k < 3; ++k) real.channel(u, b, k) = Complex(static_cast<double>(100 * u + 10 * b + k), 0);
  real.noise_power_per_band = 1;
  real.band_width = 10;
  real.user_power_budget = 0.5;
  clustering::VirtualCellPartition part;
  part.num_cells = 2;
  part.bs_of_cell = {{0, 1}, {2}};
  part.cell_of_bs = {0, 0, 1};
  part.users_of_cell = {{0, 1}, {}};
  part.serving_bs = {0, 1};
  part.cell_of_user = {0, 0};
  freqalloc::FrequencyPlan plan;
  plan.bands_of_bs = {{0, 1}, {1, 2}, {0, 1, 2}};
  plan.bands_of_user = {{0, 1, 2}, {2}};
  const auto pr = make_cell_problem(real, part, plan, 0);
  CHECK(pr.listening[0] == std::vector<std::size_t>{0});
  CHECK(pr.listening[1] == std::vector<std::size_t>{0, 1});
  CHECK(pr.listening[2] == std::vector<std::size_t>{1});
  CHECK(pr.channels[1].rows() == 2);
  CHECK(pr.channels[1](1, 1) == Complex(111, 0));
  CHECK(pr.channels[2](0, 0) == Complex(12, 0));
  CHECK(pr.allowed[1] == std::vector<char>{0, 0, 1});
  CHECK(pr.budget == std::vector<double>{0.5, 0.5});
  CHECK(pr.band_width == 10);

  const auto sol = solve_cell(pr);
  Eigen::MatrixXd global = Eigen::MatrixXd::Constant(2, 3, -1);
  scatter(pr, sol.power, global);
  CHECK(global(1, 0) == 0.0);
  CHECK(global.row(1).sum() == doctest::Approx(0.5));
  CHECK(allocation_csv(global).rfind("user,p0,p1,p2\n", 0) == 0);
}
