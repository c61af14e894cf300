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

#include <string>

#include "vcsim/evaluator.hpp"
#include "vcsim/freqalloc.hpp"
#include "vcsim/powalloc.hpp"

namespace vcsim::harness {

struct PipelineOptions {
  clustering::SizeSchedule schedule;  // empty: binary-tree default for num_bs
  clustering::AffiliationRule affiliation = clustering::AffiliationRule::max_over_bands;
  freqalloc::Denominator denominator = freqalloc::Denominator::total;
  powalloc::SolveOptions solver;
};

struct SweepConfig {
  scenario::ScenarioConfig scenario;
  PipelineOptions pipeline;
  std::vector<std::size_t> m_values{2, 4, 8};
  std::vector<double> gamma_d_values{0, 70, 140, 210, 280};
  std::vector<double> cgbr_values{128e3, 256e3, 512e3};
  std::size_t num_realizations = 500;
  std::string output_path = "results.csv";
  std::size_t threads = 1;  // 0: hardware concurrency
};

void validate(const SweepConfig& config);

/// Everything one (realization, m, gamma_d) grid point produces.
struct PipelineResult {
  clustering::VirtualCellPartition partition;
  intergraph::InterferenceGraph graph;
  intergraph::Coloring coloring;
  freqalloc::FrequencyPlan plan;
  Eigen::MatrixXd power;                 // [user][band], W
  evaluator::RateReport report;
  std::size_t unconverged_cells = 0;
};

clustering::SizeSchedule effective_schedule(const PipelineOptions& options, std::size_t num_bs);

PipelineResult run_pipeline(const scenario::NetworkRealization& real,
                            const clustering::ClusterHierarchy& hierarchy, std::size_t m,
                            double gamma_d, const PipelineOptions& options, double cgbr = 0.0);

struct AggregateRow {
  std::size_t m = 0;
  double gamma_d = 0.0;
  double cgbr = 0.0;
  double mean_unsatisfied = 0.0;
  double stderr_unsatisfied = 0.0;
  double mean_sum_rate = 0.0;
  double stderr_sum_rate = 0.0;
  std::size_t num_realizations = 0;

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

/// Rows ordered by m, then gamma_d, then cgbr, each in config order.
std::vector<AggregateRow> run_sweep(const SweepConfig& config);

std::string csv_text(const std::vector<AggregateRow>& rows, std::uint64_t seed);
void emit_csv(const std::vector<AggregateRow>& rows, const std::string& path, std::uint64_t seed);
std::vector<AggregateRow> read_csv(const std::string& path);

/// Writes dendrogram.txt, graph.txt, plan.csv, allocation.csv and rates.csv
/// for one grid point of one realization into `dir`.
void dump_grid_point(const SweepConfig& config, std::uint64_t realization, std::size_t m,
                     double gamma_d, const std::string& dir);

/// dump_grid_point for every (m, gamma_d) in the config, into
/// dir/m<m>_g<gamma_d>/.
void dump_grid(const SweepConfig& config, std::uint64_t realization, const std::string& dir);

}  // namespace vcsim::harness
