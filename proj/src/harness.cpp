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

#include "vcsim/harness.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace vcsim::harness {

void validate(const SweepConfig& c) {
  scenario::validate(c.scenario);
  auto bad = [](const std::string& what) { throw Error(ErrorCode::invalid_argument, "invalid sweep config: " + what); };
  if (c.m_values.empty()) bad("m_values is empty");
  if (c.gamma_d_values.empty()) bad("gamma_d_values is empty");
  if (c.cgbr_values.empty()) bad("cgbr_values is empty");
  if (c.num_realizations == 0) bad("num_realizations must be >= 1");
  for (auto m : c.m_values)
    if (m < 1 || m > c.scenario.num_bs) bad("m=" + std::to_string(m) + " outside 1..num_bs");
  for (auto g : c.gamma_d_values)
    if (!(g >= 0)) bad("gamma_d values must be >= 0");
  if (c.pipeline.solver.max_iters == 0) bad("powalloc max_iters must be >= 1");
  if (!(c.pipeline.solver.tol > 0)) bad("powalloc tol must be > 0");
}

clustering::SizeSchedule effective_schedule(const PipelineOptions& options, std::size_t num_bs) {
  if (options.schedule.max_size.empty()) return clustering::SizeSchedule::binary_tree(num_bs);
  return options.schedule;
}

PipelineResult run_pipeline(const scenario::NetworkRealization& real,
                            const clustering::ClusterHierarchy& hierarchy, std::size_t m,
                            double gamma_d, const PipelineOptions& options, double cgbr) {
  PipelineResult r;
  r.partition = clustering::affiliate_users(real, hierarchy, m, options.affiliation);
  const auto counts = r.partition.users_per_bs();
  r.graph = intergraph::build_interference_graph(real.bs_positions, r.partition, counts, gamma_d);
  r.coloring = intergraph::color_graph(r.graph);
  r.plan = freqalloc::plan_frequencies(real, r.partition, r.coloring, gamma_d, options.denominator);
  r.power = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(real.num_users()),
                                  static_cast<Eigen::Index>(real.num_bands()));
  for (std::size_t v = 0; v < r.partition.num_cells; ++v) {
    const auto problem = powalloc::make_cell_problem(real, r.partition, r.plan, v);
    const auto sol = powalloc::solve_cell(problem, options.solver);
    if (!sol.converged) ++r.unconverged_cells;
    powalloc::scatter(problem, sol.power, r.power);
  }
  r.report = evaluator::evaluate_system(real, r.partition, r.power, cgbr, gamma_d);
  return r;
}

namespace {

// Per realization: unsatisfied count per (m, gamma, cgbr) and sum rate per (m, gamma).
struct Sample {
  std::vector<double> unsatisfied;
  std::vector<double> sum_rate;
};

Sample run_realization(const SweepConfig& c, std::uint64_t index) {
  const auto real = scenario::generate_realization(c.scenario, index);
  clustering::ClusterHierarchy hierarchy;
  try {
    hierarchy = clustering::build_hierarchy(real.bs_positions, effective_schedule(c.pipeline, c.scenario.num_bs));
  } catch (const Error& e) {
    throw Error(e.code(), "realization " + std::to_string(index) + ": " + e.what());
  }
  Sample s;
  for (auto m : c.m_values) {
    for (auto gamma : c.gamma_d_values) {
      PipelineResult r;
      try {
        r = run_pipeline(real, hierarchy, m, gamma, c.pipeline);
      } catch (const Error& e) {
        std::ostringstream msg;
        msg << "realization " << index << ", m=" << m << ", gamma_d=" << gamma << ": " << e.what();
        throw Error(e.code(), msg.str());
      }
      s.sum_rate.push_back(r.report.sum_rate);
      for (auto cgbr : c.cgbr_values)
        s.unsatisfied.push_back(static_cast<double>(evaluator::count_unsatisfied(r.report.rate_per_user, cgbr)));
    }
  }
  return s;
}

struct MeanStderr {
  double mean;
  double stderr_;
};

// Fixed summation order (realization index) keeps aggregates thread-count independent.
MeanStderr summarize(const std::vector<Sample>& samples, auto pick) {
  const double n = static_cast<double>(samples.size());
  double sum = 0.0;
  for (const auto& s : samples) sum += pick(s);
  const double mean = sum / n;
  if (samples.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (const auto& s : samples) {
    const double d = pick(s) - mean;
    ss += d * d;
  }
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<AggregateRow> run_sweep(const SweepConfig& c) {
  validate(c);
  const std::size_t R = c.num_realizations;
  std::vector<Sample> samples(R);

  std::size_t workers = c.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : c.threads;
  workers = std::min(workers, R);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= R) return;
      try {
        samples[i] = run_realization(c, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(R);
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<AggregateRow> rows;
  const std::size_t nc = c.cgbr_values.size();
  std::size_t grid = 0;
  for (auto m : c.m_values) {
    for (auto gamma : c.gamma_d_values) {
      const auto rate = summarize(samples, [&](const Sample& s) { return s.sum_rate[grid]; });
      for (std::size_t ci = 0; ci < nc; ++ci) {
        const auto unsat = summarize(samples, [&](const Sample& s) { return s.unsatisfied[grid * nc + ci]; });
        rows.push_back({m, gamma, c.cgbr_values[ci], unsat.mean, unsat.stderr_, rate.mean, rate.stderr_, R});
      }
      ++grid;
    }
  }
  return rows;
}

std::string csv_text(const std::vector<AggregateRow>& rows, std::uint64_t seed) {
  std::ostringstream out;
  out << "# seed=" << seed << '\n';
  out << "m,gamma_d,cgbr,mean_unsatisfied,stderr_unsatisfied,mean_sum_rate,stderr_sum_rate,n\n";
  for (const auto& r : rows)
    out << r.m << ',' << format_double(r.gamma_d) << ',' << format_double(r.cgbr) << ','
        << format_double(r.mean_unsatisfied) << ',' << format_double(r.stderr_unsatisfied) << ','
        << format_double(r.mean_sum_rate) << ',' << format_double(r.stderr_sum_rate) << ','
        << r.num_realizations << '\n';
  return out.str();
}

void emit_csv(const std::vector<AggregateRow>& rows, const std::string& path, std::uint64_t seed) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::io, "cannot open '" + path + "' for writing");
  f << csv_text(rows, seed);
  f.flush();
  if (!f) throw Error(ErrorCode::io, "write to '" + path + "' failed");
}

namespace {

template <typename T>
T parse_field(const std::string& s, const std::string& path, std::size_t line) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw Error(ErrorCode::parse, path + ":" + std::to_string(line) + ": bad field '" + s + "'");
  return v;
}

}  // namespace

std::vector<AggregateRow> read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::io, "cannot open '" + path + "'");
  std::vector<AggregateRow> rows;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 8) throw Error(ErrorCode::parse, path + ":" + std::to_string(lineno) + ": expected 8 fields");
    AggregateRow r;
    r.m = parse_field<std::size_t>(fields[0], path, lineno);
    r.gamma_d = parse_field<double>(fields[1], path, lineno);
    r.cgbr = parse_field<double>(fields[2], path, lineno);
    r.mean_unsatisfied = parse_field<double>(fields[3], path, lineno);
    r.stderr_unsatisfied = parse_field<double>(fields[4], path, lineno);
    r.mean_sum_rate = parse_field<double>(fields[5], path, lineno);
    r.stderr_sum_rate = parse_field<double>(fields[6], path, lineno);
    r.num_realizations = parse_field<std::size_t>(fields[7], path, lineno);
    rows.push_back(r);
  }
  return rows;
}

void dump_grid_point(const SweepConfig& c, std::uint64_t realization, std::size_t m, double gamma_d,
                     const std::string& dir) {
  validate(c);
  if (m < 1 || m > c.scenario.num_bs) throw Error(ErrorCode::invalid_argument, "m outside 1..num_bs");
  const auto real = scenario::generate_realization(c.scenario, realization);
  const auto hierarchy =
      clustering::build_hierarchy(real.bs_positions, effective_schedule(c.pipeline, c.scenario.num_bs));
  const auto r = run_pipeline(real, hierarchy, m, gamma_d, c.pipeline, c.cgbr_values.front());

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::io, "cannot create '" + dir + "': " + ec.message());
  auto write = [&](const char* name, const std::string& text) {
    const auto path = (std::filesystem::path(dir) / name).string();
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::io, "cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw Error(ErrorCode::io, "write to '" + path + "' failed");
  };
  write("dendrogram.txt", clustering::dendrogram_text(hierarchy));
  write("graph.txt", intergraph::edge_list_text(r.graph));
  write("plan.csv", freqalloc::plan_csv(r.plan));
  write("allocation.csv", powalloc::allocation_csv(r.power));
  write("rates.csv", evaluator::report_csv(r.report, r.partition));
}

void dump_grid(const SweepConfig& c, std::uint64_t realization, const std::string& dir) {
  for (auto m : c.m_values)
    for (auto gamma : c.gamma_d_values)
      dump_grid_point(c, realization, m, gamma,
                      (std::filesystem::path(dir) / ("m" + std::to_string(m) + "_g" + format_double(gamma))).string());
}

}  // namespace vcsim::harness
