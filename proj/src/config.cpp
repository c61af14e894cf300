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

#include "vcsim/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace vcsim::config {

namespace pt = boost::property_tree;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::parse, "config: " + what); }

template <typename T>
void read(const pt::ptree& node, const std::string& key, T& out) {
  const auto child = node.get_child_optional(key);
  if (!child) return;
  const auto text = trim(child->data());
  std::istringstream in(text);
  T v{};
  in >> v;
  if (!in || !in.eof()) fail("bad value '" + text + "' for key '" + key + "'");
  out = v;
}

void check_keys(const pt::ptree& node, const std::string& where, const std::set<std::string>& known) {
  for (const auto& [key, child] : node) {
    if (!child.empty()) continue;  // sections are checked by the caller
    if (!known.contains(key)) fail("unknown key '" + key + "' in " + where);
  }
}

}  // namespace

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto t = trim(item);
    if (t.empty()) fail("empty element in list '" + text + "'");
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      fail("bad number '" + t + "'");
    }
    if (used != t.size()) fail("bad number '" + t + "'");
    out.push_back(v);
  }
  if (out.empty()) fail("empty list");
  return out;
}

std::vector<std::size_t> parse_count_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (double v : parse_double_list(text)) {
    if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) fail("expected a non-negative integer, got " + std::to_string(v));
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

harness::SweepConfig parse_sweep_config(const std::string& text) {
  pt::ptree root;
  try {
    std::istringstream in(text);
    pt::read_ini(in, root);
  } catch (const pt::ini_parser_error& e) {
    fail(e.what());
  }

  harness::SweepConfig c;
  auto& s = c.scenario;
  check_keys(root, "top level",
             {"num_bs", "num_users", "side_length", "num_bands", "total_bandwidth", "carrier_freq", "noise_psd",
              "user_power_budget", "seed"});
  read(root, "num_bs", s.num_bs);
  read(root, "num_users", s.num_users);
  read(root, "side_length", s.side_length);
  read(root, "num_bands", s.num_bands);
  read(root, "total_bandwidth", s.total_bandwidth);
  read(root, "carrier_freq", s.carrier_freq);
  read(root, "noise_psd", s.noise_psd_dbm_hz);
  read(root, "user_power_budget", s.user_power_budget_dbm);
  read(root, "seed", s.seed);

  const std::set<std::string> sections{"channel_params", "clustering", "freqalloc", "powalloc", "sweep"};
  for (const auto& [key, child] : root)
    if (!child.empty() && !sections.contains(key)) fail("unknown section [" + key + "]");

  if (const auto ch = root.get_child_optional("channel_params")) {
    auto& p = s.channel;
    check_keys(*ch, "[channel_params]",
               {"pathloss_intercept_los", "pathloss_exponent_los", "pathloss_intercept_nlos", "pathloss_exponent_nlos",
                "shadowing_sigma_los", "shadowing_sigma_nlos", "los_decay", "small_scale"});
    read(*ch, "pathloss_intercept_los", p.pathloss_intercept_los);
    read(*ch, "pathloss_exponent_los", p.pathloss_exponent_los);
    read(*ch, "pathloss_intercept_nlos", p.pathloss_intercept_nlos);
    read(*ch, "pathloss_exponent_nlos", p.pathloss_exponent_nlos);
    read(*ch, "shadowing_sigma_los", p.shadowing_sigma_los);
    read(*ch, "shadowing_sigma_nlos", p.shadowing_sigma_nlos);
    read(*ch, "los_decay", p.los_decay);
    if (const auto v = ch->get_optional<std::string>("small_scale")) {
      const auto t = trim(*v);
      if (t == "rayleigh") p.small_scale = scenario::SmallScale::rayleigh;
      else if (t == "none") p.small_scale = scenario::SmallScale::none;
      else fail("small_scale must be 'rayleigh' or 'none', got '" + t + "'");
    }
  }

  auto& pl = c.pipeline;
  if (const auto cl = root.get_child_optional("clustering")) {
    check_keys(*cl, "[clustering]", {"size_schedule", "affiliation"});
    if (const auto v = cl->get_optional<std::string>("size_schedule")) {
      const auto t = trim(*v);
      if (t == "binary_tree") pl.schedule = {};
      else if (t == "unconstrained") pl.schedule = clustering::SizeSchedule::unconstrained(s.num_bs);
      else {
        // Explicit caps for m = 1..num_bs.
        auto caps = parse_count_list(t);
        if (caps.size() != s.num_bs) fail("size_schedule list needs num_bs entries (m = 1..num_bs)");
        pl.schedule.max_size = {0};
        pl.schedule.max_size.insert(pl.schedule.max_size.end(), caps.begin(), caps.end());
      }
    }
    if (const auto v = cl->get_optional<std::string>("affiliation")) {
      const auto t = trim(*v);
      if (t == "max_over_bands") pl.affiliation = clustering::AffiliationRule::max_over_bands;
      else if (t == "mean_power") pl.affiliation = clustering::AffiliationRule::mean_power;
      else fail("affiliation must be 'max_over_bands' or 'mean_power', got '" + t + "'");
    }
  }
  if (const auto fa = root.get_child_optional("freqalloc")) {
    check_keys(*fa, "[freqalloc]", {"denominator"});
    if (const auto v = fa->get_optional<std::string>("denominator")) {
      const auto t = trim(*v);
      if (t == "total") pl.denominator = freqalloc::Denominator::total;
      else if (t == "others") pl.denominator = freqalloc::Denominator::others;
      else fail("denominator must be 'total' or 'others', got '" + t + "'");
    }
  }
  if (const auto pa = root.get_child_optional("powalloc")) {
    check_keys(*pa, "[powalloc]", {"tol", "max_iters"});
    read(*pa, "tol", pl.solver.tol);
    read(*pa, "max_iters", pl.solver.max_iters);
  }
  if (const auto sw = root.get_child_optional("sweep")) {
    check_keys(*sw, "[sweep]", {"m_values", "gamma_d_values", "cgbr_values", "num_realizations", "output", "threads"});
    if (const auto v = sw->get_optional<std::string>("m_values")) c.m_values = parse_count_list(*v);
    if (const auto v = sw->get_optional<std::string>("gamma_d_values")) c.gamma_d_values = parse_double_list(*v);
    if (const auto v = sw->get_optional<std::string>("cgbr_values")) c.cgbr_values = parse_double_list(*v);
    read(*sw, "num_realizations", c.num_realizations);
    if (const auto v = sw->get_optional<std::string>("output")) c.output_path = trim(*v);
    read(*sw, "threads", c.threads);
  }
  harness::validate(c);
  return c;
}

harness::SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::io, "cannot open config '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  try {
    return parse_sweep_config(buf.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace vcsim::config
