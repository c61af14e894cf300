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

#include "vcsim/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace vcsim::evaluator {

Eigen::VectorXcd channel_vector(const scenario::NetworkRealization& real,
                                std::span<const std::size_t> bss, std::size_t u, std::size_t k) {
  Eigen::VectorXcd h(static_cast<Eigen::Index>(bss.size()));
  for (std::size_t r = 0; r < bss.size(); ++r) h(static_cast<Eigen::Index>(r)) = real.channel(u, bss[r], k);
  return h;
}

Eigen::MatrixXcd interference_covariance(const scenario::NetworkRealization& real,
                                         const clustering::VirtualCellPartition& partition,
                                         const Eigen::MatrixXd& power, std::size_t cell,
                                         std::size_t band) {
  const auto& bss = partition.bs_of_cell.at(cell);
  const auto d = static_cast<Eigen::Index>(bss.size());
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Identity(d, d) * real.noise_power_per_band;
  for (std::size_t u = 0; u < real.num_users(); ++u) {
    if (partition.cell_of_user[u] == cell) continue;
    const double p = power(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(band));
    if (p <= 0) continue;
    const auto h = channel_vector(real, bss, u, band);
    j.noalias() += p * h * h.adjoint();
  }
  return j;
}

std::vector<double> sic_rates(const Eigen::MatrixXcd& outside, const Eigen::MatrixXcd& channels,
                              std::span<const double> powers, std::span<const std::size_t> order,
                              double band_width) {
  std::vector<double> rates(static_cast<std::size_t>(channels.cols()), 0.0);
  Eigen::MatrixXcd j = outside;
  // Walk from the last decoded user backwards so J only ever grows.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto u = static_cast<Eigen::Index>(*it);
    const double p = powers[*it];
    if (p <= 0) continue;
    const auto h = channels.col(u);
    Eigen::LLT<Eigen::MatrixXcd> llt(j);
    if (llt.info() != Eigen::Success) throw Error(ErrorCode::internal, "interference covariance is not positive definite");
    const double sinr = p * h.dot(llt.solve(h)).real();
    rates[*it] = band_width * std::log1p(sinr) / std::numbers::ln2;
    j.noalias() += p * h * h.adjoint();
  }
  return rates;
}

CellDecoding decode_cell(const scenario::NetworkRealization& real,
                         const clustering::VirtualCellPartition& partition,
                         const Eigen::MatrixXd& power, std::size_t cell) {
  CellDecoding dec;
  dec.cell = cell;
  dec.users = partition.users_of_cell.at(cell);
  const auto& bss = partition.bs_of_cell.at(cell);
  const std::size_t n = dec.users.size();
  const std::size_t K = real.num_bands();
  const double W = real.band_width;
  dec.rates = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(K));
  dec.order.resize(K);
  if (n == 0) return dec;

  std::vector<double> accumulated(n, 0.0);
  std::vector<double> key(n);
  std::vector<double> p(n);
  const auto d = static_cast<Eigen::Index>(bss.size());
  Eigen::MatrixXcd h(d, static_cast<Eigen::Index>(n));

  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = power(static_cast<Eigen::Index>(dec.users[i]), static_cast<Eigen::Index>(k));
      h.col(static_cast<Eigen::Index>(i)) = channel_vector(real, bss, dec.users[i], k);
    }
    const Eigen::MatrixXcd outside = interference_covariance(real, partition, power, cell, k);
    Eigen::MatrixXcd total = outside;
    for (std::size_t i = 0; i < n; ++i)
      if (p[i] > 0) total.noalias() += p[i] * h.col(static_cast<Eigen::Index>(i)) * h.col(static_cast<Eigen::Index>(i)).adjoint();
    Eigen::LLT<Eigen::MatrixXcd> llt(total);

    // Stand-alone rate against everyone else: W log2(1 + p h^H (S - p h h^H)^{-1} h)
    // = -W log2(1 - p h^H S^{-1} h).
    for (std::size_t i = 0; i < n; ++i) {
      double g = 0.0;
      if (p[i] > 0) {
        const auto hi = h.col(static_cast<Eigen::Index>(i));
        const double a = hi.dot(llt.solve(hi)).real();
        g = -W * std::log1p(-std::min(p[i] * a, 1.0 - 1e-300)) / std::numbers::ln2;
      }
      key[i] = accumulated[i] + g;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const bool ta = p[a] > 0, tb = p[b] > 0;
      if (ta != tb) return ta;
      return key[a] > key[b];
    });

    const auto r = sic_rates(outside, h, p, order, W);
    for (std::size_t i = 0; i < n; ++i) {
      dec.rates(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = r[i];
      accumulated[i] += r[i];
    }
    dec.order[k].reserve(n);
    for (auto i : order) dec.order[k].push_back(dec.users[i]);
  }
  return dec;
}

std::size_t count_unsatisfied(std::span<const double> rates, double cgbr) {
  return static_cast<std::size_t>(std::count_if(rates.begin(), rates.end(), [&](double r) { return r < cgbr; }));
}

RateReport evaluate_system(const scenario::NetworkRealization& real,
                           const clustering::VirtualCellPartition& partition,
                           const Eigen::MatrixXd& power, double cgbr, double gamma_d) {
  RateReport rep;
  rep.m = partition.num_cells;
  rep.gamma_d = gamma_d;
  rep.cgbr = cgbr;
  rep.per_band_rates = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(real.num_users()),
                                             static_cast<Eigen::Index>(real.num_bands()));
  for (std::size_t v = 0; v < partition.num_cells; ++v) {
    const auto dec = decode_cell(real, partition, power, v);
    for (std::size_t i = 0; i < dec.users.size(); ++i)
      rep.per_band_rates.row(static_cast<Eigen::Index>(dec.users[i])) = dec.rates.row(static_cast<Eigen::Index>(i));
  }
  rep.rate_per_user.resize(real.num_users());
  for (std::size_t u = 0; u < real.num_users(); ++u) {
    rep.rate_per_user[u] = rep.per_band_rates.row(static_cast<Eigen::Index>(u)).sum();
    rep.sum_rate += rep.rate_per_user[u];
  }
  rep.unsatisfied_count = count_unsatisfied(rep.rate_per_user, cgbr);
  return rep;
}

std::string report_csv(const RateReport& rep, const clustering::VirtualCellPartition& partition) {
  std::ostringstream out;
  out.precision(17);
  out << "kind,user,cell,rate,unsatisfied\n";
  for (std::size_t u = 0; u < rep.rate_per_user.size(); ++u)
    out << "user," << u << ',' << partition.cell_of_user[u] << ',' << rep.rate_per_user[u] << ','
        << (rep.rate_per_user[u] < rep.cgbr ? 1 : 0) << '\n';
  out << "summary,,," << rep.sum_rate << ',' << rep.unsatisfied_count << '\n';
  return out.str();
}

}  // namespace vcsim::evaluator
