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

#include <Eigen/Dense>

#include "vcsim/freqalloc.hpp"

namespace vcsim::powalloc {

/// Per-virtual-cell sum-capacity problem, restricted to the frequency plan:
/// on band k only the cell's BSs with k in K_b listen.
struct CellPowerProblem {
  std::size_t cell = 0;
  std::vector<std::size_t> users;                    // global user ids
  std::size_t num_bands = 0;
  double band_width = 0.0;                           // Hz
  double noise_power = 0.0;                          // sigma^2, W
  std::vector<double> budget;                        // per local user, W
  std::vector<std::vector<char>> allowed;            // [local user][band], K_u mask
  std::vector<std::vector<std::size_t>> listening;   // per band, global BS ids
  std::vector<Eigen::MatrixXcd> channels;            // per band: listening x users

  std::size_t num_users() const { return users.size(); }
};

/// Powers in watts, one row per local user, one column per band.
using PowerMatrix = Eigen::MatrixXd;

struct WaterFill {
  std::vector<double> power;
  double level = 0.0;  // W / lambda; zero when nothing is allocated
};

struct SolveOptions {
  double tol = 1e-6;             // relative to each user's budget
  std::size_t max_iters = 500;   // full best-response cycles
  bool record_trace = false;     // objective after every cycle
};

struct CellSolution {
  PowerMatrix power;
  bool converged = false;
  std::size_t iterations = 0;
  double objective = 0.0;        // bits/s
  std::vector<double> objective_trace;
};

CellPowerProblem make_cell_problem(const scenario::NetworkRealization& real,
                                   const clustering::VirtualCellPartition& partition,
                                   const freqalloc::FrequencyPlan& plan, std::size_t cell);

/// p_k = (level - 1/g_k)^+ with the level chosen by bisection so the powers
/// use the whole budget. Bands with g_k <= 0 get nothing.
WaterFill waterfill_single_user(std::span<const double> gains, double budget);

/// Effective gains h^H Sigma_u^{-1} h of one user against the current powers
/// of the other users in the cell (zero on disallowed or silent bands).
std::vector<double> effective_gains(const CellPowerProblem& problem, const PowerMatrix& power,
                                    std::size_t local_user);

/// Cyclic iterative water-filling, users in ascending order, starting from
/// zero power. Stops when no power moves by more than tol * budget in a cycle.
CellSolution solve_cell(const CellPowerProblem& problem, const SolveOptions& options = {});

/// sum_k W log2 det(I + sum_u p_uk h h^H / sigma^2).
double cell_objective(const CellPowerProblem& problem, const PowerMatrix& power);

/// Scatter per-cell solutions into a [user][band] matrix.
void scatter(const CellPowerProblem& problem, const PowerMatrix& local, Eigen::MatrixXd& global);

std::string allocation_csv(const Eigen::MatrixXd& global);

}  // namespace vcsim::powalloc
