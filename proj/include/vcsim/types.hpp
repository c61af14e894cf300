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

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vcsim {

enum class ErrorCode {
  invalid_argument = 1,
  infeasible_schedule = 2,
  io = 3,
  parse = 4,
  internal = 5,
};

// All library failures are reported as vcsim::Error; the C API maps the code
// onto vcsim_status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(const Point& p, const Point& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

using Complex = std::complex<double>;
using BandSet = std::vector<std::size_t>;  // sorted, 0-based band indices

// Dense [user][bs][band] tensor of complex channel coefficients.
class ChannelTensor {
public:
  ChannelTensor() = default;
  ChannelTensor(std::size_t users, std::size_t bss, std::size_t bands)
      : users_(users), bss_(bss), bands_(bands), data_(users * bss * bands) {}

  std::size_t num_users() const noexcept { return users_; }
  std::size_t num_bs() const noexcept { return bss_; }
  std::size_t num_bands() const noexcept { return bands_; }

  Complex& operator()(std::size_t u, std::size_t b, std::size_t k) {
    return data_[(u * bss_ + b) * bands_ + k];
  }
  const Complex& operator()(std::size_t u, std::size_t b, std::size_t k) const {
    return data_[(u * bss_ + b) * bands_ + k];
  }
  const std::vector<Complex>& raw() const noexcept { return data_; }

  friend bool operator==(const ChannelTensor&, const ChannelTensor&) = default;

private:
  std::size_t users_ = 0;
  std::size_t bss_ = 0;
  std::size_t bands_ = 0;
  std::vector<Complex> data_;
};

}  // namespace vcsim
