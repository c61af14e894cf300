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

#include "vcsim/powalloc.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <sstream>

namespace vcsim::powalloc {

namespace {

double log2_det_pd(const Eigen::MatrixXcd& m) {
  Eigen::LLT<Eigen::MatrixXcd> llt(m);
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::internal, "covariance is not positive definite");
  double s = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) s += std::log(llt.matrixLLT()(i, i).real());
  return 2.0 * s / std::numbers::ln2;
}

Eigen::MatrixXcd covariance(const CellPowerProblem& pr, const PowerMatrix& p, std::size_t k) {
  const auto& h = pr.channels[k];
  const auto d = h.rows();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Identity(d, d) * pr.noise_power;
  for (Eigen::Index u = 0; u < h.cols(); ++u) {
    const double pw = p(u, static_cast<Eigen::Index>(k));
    if (pw > 0) s.noalias() += pw * h.col(u) * h.col(u).adjoint();
  }
  return s;
}

Eigen::MatrixXcd inverse_pd(const Eigen::MatrixXcd& m) {
  Eigen::LLT<Eigen::MatrixXcd> llt(m);
  if (llt.info() != Eigen::Success) throw Error(ErrorCode::internal, "covariance is not positive definite");
  return llt.solve(Eigen::MatrixXcd::Identity(m.rows(), m.cols()));
}

}  // namespace

CellPowerProblem make_cell_problem(const scenario::NetworkRealization& real,
                                   const clustering::VirtualCellPartition& partition,
                                   const freqalloc::FrequencyPlan& plan, std::size_t cell) {
  CellPowerProblem pr;
  pr.cell = cell;
  pr.users = partition.users_of_cell.at(cell);
  pr.num_bands = real.num_bands();
  pr.band_width = real.band_width;
  pr.noise_power = real.noise_power_per_band;
  pr.budget.assign(pr.users.size(), real.user_power_budget);
  pr.allowed.assign(pr.users.size(), std::vector<char>(pr.num_bands, 0));
  for (std::size_t i = 0; i < pr.users.size(); ++i)
    for (auto k : plan.bands_of_user[pr.users[i]]) pr.allowed[i][k] = 1;

  pr.listening.resize(pr.num_bands);
  pr.channels.resize(pr.num_bands);
  for (std::size_t k = 0; k < pr.num_bands; ++k) {
    for (auto b : partition.bs_of_cell[cell]) {
      const auto& kb = plan.bands_of_bs[b];
      if (std::binary_search(kb.begin(), kb.end(), k)) pr.listening[k].push_back(b);
    }
    auto& h = pr.channels[k];
    h.resize(static_cast<Eigen::Index>(pr.listening[k].size()), static_cast<Eigen::Index>(pr.users.size()));
    for (std::size_t r = 0; r < pr.listening[k].size(); ++r)
      for (std::size_t i = 0; i < pr.users.size(); ++i)
        h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = real.channel(pr.users[i], pr.listening[k][r], k);
  }
  return pr;
}

WaterFill waterfill_single_user(std::span<const double> gains, double budget) {
  WaterFill wf;
  wf.power.assign(gains.size(), 0.0);
  if (budget <= 0) return wf;

  std::vector<double> floor_of;  // 1/g on usable bands
  std::vector<std::size_t> usable;
  for (std::size_t k = 0; k < gains.size(); ++k) {
    if (gains[k] > 0 && std::isfinite(1.0 / gains[k])) {
      usable.push_back(k);
      floor_of.push_back(1.0 / gains[k]);
    }
  }
  if (usable.empty()) return wf;

  auto filled = [&](double level) {
    double s = 0.0;
    for (double f : floor_of) s += std::max(0.0, level - f);
    return s;
  };

  const double base = *std::min_element(floor_of.begin(), floor_of.end());
  double lo = base;
  double hi = base + budget;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (filled(mid) < budget ? lo : hi) = mid;
  }

  // Re-derive the level exactly on the active set located by the search,
  // measured from the lowest floor to avoid cancellation.
  std::vector<char> active(usable.size());
  std::vector<double> offset(usable.size());
  for (std::size_t i = 0; i < usable.size(); ++i) {
    active[i] = floor_of[i] < hi;
    offset[i] = floor_of[i] - base;
  }
  double rise = 0.0;
  for (;;) {
    double sum = budget;
    std::size_t count = 0;
    for (std::size_t i = 0; i < usable.size(); ++i)
      if (active[i]) {
        sum += offset[i];
        ++count;
      }
    rise = sum / static_cast<double>(count);
    bool changed = false;
    for (std::size_t i = 0; i < usable.size(); ++i)
      if (active[i] && offset[i] >= rise && count > 1) {
        active[i] = 0;
        changed = true;
      }
    if (!changed) break;
  }
  for (std::size_t i = 0; i < usable.size(); ++i)
    if (active[i]) wf.power[usable[i]] = std::max(0.0, rise - offset[i]);
  wf.level = base + rise;
  return wf;
}

std::vector<double> effective_gains(const CellPowerProblem& pr, const PowerMatrix& p, std::size_t u) {
  std::vector<double> g(pr.num_bands, 0.0);
  const auto ui = static_cast<Eigen::Index>(u);
  for (std::size_t k = 0; k < pr.num_bands; ++k) {
    const auto& h = pr.channels[k];
    if (!pr.allowed[u][k] || h.rows() == 0) continue;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Identity(h.rows(), h.rows()) * pr.noise_power;
    for (Eigen::Index o = 0; o < h.cols(); ++o) {
      const double pw = p(o, static_cast<Eigen::Index>(k));
      if (o != ui && pw > 0) s.noalias() += pw * h.col(o) * h.col(o).adjoint();
    }
    Eigen::LLT<Eigen::MatrixXcd> llt(s);
    g[k] = h.col(ui).dot(llt.solve(h.col(ui))).real();
  }
  return g;
}

CellSolution solve_cell(const CellPowerProblem& pr, const SolveOptions& opt) {
  const std::size_t n = pr.num_users();
  const std::size_t K = pr.num_bands;
  CellSolution sol;
  sol.power = PowerMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(K));
  if (n == 0) {
    sol.converged = true;
    return sol;
  }
  if (!(pr.noise_power > 0)) throw Error(ErrorCode::invalid_argument, "noise power must be positive");

  auto& p = sol.power;
  std::vector<Eigen::MatrixXcd> inv(K);
  std::vector<double> gains(K);
  Eigen::VectorXcd v;

  for (std::size_t iter = 1; iter <= opt.max_iters; ++iter) {
    // Fresh inverses each cycle; rank-one updates in between.
    for (std::size_t k = 0; k < K; ++k)
      if (pr.channels[k].rows() > 0) inv[k] = inverse_pd(covariance(pr, p, k));

    double max_move = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      const auto ui = static_cast<Eigen::Index>(u);
      for (std::size_t k = 0; k < K; ++k) {
        gains[k] = 0.0;
        const auto& h = pr.channels[k];
        if (!pr.allowed[u][k] || h.rows() == 0) continue;
        const double a = h.col(ui).dot(inv[k] * h.col(ui)).real();
        const double own = p(ui, static_cast<Eigen::Index>(k));
        // h^H (S - p h h^H)^{-1} h = a / (1 - p a)
        const double denom = std::max(1.0 - own * a, std::numeric_limits<double>::min());
        gains[k] = a / denom;
      }
      const auto wf = waterfill_single_user(gains, pr.budget[u]);
      for (std::size_t k = 0; k < K; ++k) {
        const auto ki = static_cast<Eigen::Index>(k);
        const double delta = wf.power[k] - p(ui, ki);
        if (delta == 0.0) continue;
        max_move = std::max(max_move, std::abs(delta) / pr.budget[u]);
        p(ui, ki) = wf.power[k];
        const auto& h = pr.channels[k];
        if (h.rows() == 0) continue;
        v.noalias() = inv[k] * h.col(ui);
        const double q = h.col(ui).dot(v).real();
        inv[k].noalias() -= (delta / (1.0 + delta * q)) * v * v.adjoint();
      }
    }
    sol.iterations = iter;
    if (opt.record_trace) sol.objective_trace.push_back(cell_objective(pr, p));
    if (max_move < opt.tol) {
      sol.converged = true;
      break;
    }
  }
  sol.objective = cell_objective(pr, p);
  return sol;
}

double cell_objective(const CellPowerProblem& pr, const PowerMatrix& p) {
  double total = 0.0;
  for (std::size_t k = 0; k < pr.num_bands; ++k) {
    const auto& h = pr.channels[k];
    const auto d = h.rows();
    if (d == 0) continue;
    // |I_d + H P H^H / s| = |I_n + P^{1/2} H^H H P^{1/2} / s|; use the smaller side.
    std::vector<Eigen::Index> on;
    for (Eigen::Index u = 0; u < h.cols(); ++u)
      if (p(u, static_cast<Eigen::Index>(k)) > 0) on.push_back(u);
    if (on.empty()) continue;
    const auto n_on = static_cast<Eigen::Index>(on.size());
    Eigen::MatrixXcd scaled(d, n_on);
    for (Eigen::Index j = 0; j < n_on; ++j)
      scaled.col(j) = h.col(on[j]) * std::sqrt(p(on[j], static_cast<Eigen::Index>(k)) / pr.noise_power);
    Eigen::MatrixXcd m = n_on < d ? Eigen::MatrixXcd(scaled.adjoint() * scaled) : Eigen::MatrixXcd(scaled * scaled.adjoint());
    m.diagonal().array() += 1.0;
    total += pr.band_width * log2_det_pd(m);
  }
  return total;
}

void scatter(const CellPowerProblem& pr, const PowerMatrix& local, Eigen::MatrixXd& global) {
  for (std::size_t i = 0; i < pr.users.size(); ++i)
    global.row(static_cast<Eigen::Index>(pr.users[i])) = local.row(static_cast<Eigen::Index>(i));
}

std::string allocation_csv(const Eigen::MatrixXd& global) {
  std::ostringstream out;
  out.precision(17);
  out << "user";
  for (Eigen::Index k = 0; k < global.cols(); ++k) out << ",p" << k;
  out << '\n';
  for (Eigen::Index u = 0; u < global.rows(); ++u) {
    out << u;
    for (Eigen::Index k = 0; k < global.cols(); ++k) out << ',' << global(u, k);
    out << '\n';
  }
  return out.str();
}

}  // namespace vcsim::powalloc
