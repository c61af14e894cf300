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

#include "vcsim/clustering.hpp"

namespace vcsim::evaluator {

struct CellDecoding {
  std::size_t cell = 0;
  std::vector<std::size_t> users;                  // global ids, ascending
  std::vector<std::vector<std::size_t>> order;     // per band: global ids, first decoded first
  Eigen::MatrixXd rates;                           // [local user][band], bits/s
};

struct RateReport {
  std::vector<double> rate_per_user;   // R(u), bits/s
  Eigen::MatrixXd per_band_rates;      // R(u, k)
  std::size_t unsatisfied_count = 0;
  double sum_rate = 0.0;
  std::size_t m = 0;
  double gamma_d = 0.0;
  double cgbr = 0.0;
};

/// Channel vector of user u on band k towards the given BSs.
Eigen::VectorXcd channel_vector(const scenario::NetworkRealization& real,
                                std::span<const std::size_t> bss, std::size_t u, std::size_t k);

/// sigma^2 I + sum over users outside the cell of p h h^H, on the cell's BSs.
Eigen::MatrixXcd interference_covariance(const scenario::NetworkRealization& real,
                                         const clustering::VirtualCellPartition& partition,
                                         const Eigen::MatrixXd& power, std::size_t cell,
                                         std::size_t band);

/// Successive-cancellation rates on one band for a given decoding order
/// (indices into the columns of `channels`). The user decoded at position i
/// sees `outside` plus every in-cell user decoded after it. Users with zero
/// power get zero rate.
std::vector<double> sic_rates(const Eigen::MatrixXcd& outside, const Eigen::MatrixXcd& channels,
                              std::span<const double> powers, std::span<const std::size_t> order,
                              double band_width);

/// Greedy min-rate decoding order, bands in ascending index: on the first
/// band users are decoded by descending stand-alone rate, on later bands by
/// descending accumulated rate plus stand-alone rate. Silent users go last.
CellDecoding decode_cell(const scenario::NetworkRealization& real,
                         const clustering::VirtualCellPartition& partition,
                         const Eigen::MatrixXd& power, std::size_t cell);

std::size_t count_unsatisfied(std::span<const double> rates, double cgbr);

RateReport evaluate_system(const scenario::NetworkRealization& real,
                           const clustering::VirtualCellPartition& partition,
                           const Eigen::MatrixXd& power, double cgbr, double gamma_d = 0.0);

/// One "user,<id>,<cell>,<rate>,<0|1>" row per user, then
/// "summary,,,<sum rate>,<unsatisfied count>".
std::string report_csv(const RateReport& report, const clustering::VirtualCellPartition& partition);

}  // namespace vcsim::evaluator
