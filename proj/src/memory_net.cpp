// Copyright 2026 The netctl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netctl/memory_net.hpp"

#include <cmath>
#include <memory>

#include "netctl/errors.hpp"

namespace netctl {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Eigen::VectorXi bitmap_to_pattern(const char* rows[5]) {
  Eigen::VectorXi xi(25);
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) {
      xi[5 * r + c] = rows[r][c] == '1' ? 1 : -1;
    }
  }
  return xi;
}

}  // namespace

Mat hebb_weights(const std::vector<Eigen::VectorXi>& patterns) {
  if (patterns.empty()) throw Error("hebb_weights: no patterns");
  const Eigen::Index n = patterns.front().size();
  for (const auto& xi : patterns) {
    if (xi.size() != n) throw Error("hebb_weights: pattern lengths differ");
    for (Eigen::Index i = 0; i < n; ++i) {
      if (xi[i] != 1 && xi[i] != -1) {
        throw Error("hebb_weights: pattern entries must be +1 or -1");
      }
    }
  }
  Mat c(n, n);
  const double scale = 1.0 / static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      int sum = 0;
      for (const auto& xi : patterns) sum += xi[i] * xi[j];
      const double value = scale * static_cast<double>(sum);
      c(i, j) = value;
      c(j, i) = value;
    }
  }
  return c;
}

MemoryParams make_memory_params(const std::vector<Eigen::VectorXi>& patterns,
                                double epsilon) {
  MemoryParams p;
  p.patterns = patterns;
  p.coupling = hebb_weights(patterns);
  p.epsilon = epsilon;
  return p;
}

NetworkModel memory_model(const MemoryParams& params) {
  auto p = std::make_shared<MemoryParams>(params);
  const int n = static_cast<int>(params.coupling.rows());

  NetworkModel model;
  model.nodes = n;
  model.node_dim = 1;

  model.drift = [p, n](const Vec& x) {
    const double second = p->epsilon / static_cast<double>(n);
    Vec f = Vec::Zero(n);
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double d = x[j] - x[i];
        acc += p->coupling(i, j) * std::sin(d) + second * std::sin(2.0 * d);
      }
      f[i] = acc;
    }
    return f;
  };

  model.jacobian = [p, n](const Vec& x) {
    const double second = p->epsilon / static_cast<double>(n);
    Mat jac = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      double diag = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double d = x[j] - x[i];
        const double entry =
            p->coupling(i, j) * std::cos(d) + 2.0 * second * std::cos(2.0 * d);
        jac(i, j) = entry;
        diag -= entry;
      }
      jac(i, i) = diag;
    }
    return jac;
  };

  return model;
}

Eigen::VectorXi letter_h() {
  const char* rows[5] = {"10001", "10001", "11111", "10001", "10001"};
  return bitmap_to_pattern(rows);
}

Eigen::VectorXi letter_t() {
  const char* rows[5] = {"11111", "00100", "00100", "00100", "00100"};
  return bitmap_to_pattern(rows);
}

Eigen::VectorXi letter_l() {
  const char* rows[5] = {"10000", "10000", "10000", "10000", "11111"};
  return bitmap_to_pattern(rows);
}

std::vector<Eigen::VectorXi> letter_patterns() {
  return {letter_h(), letter_t(), letter_l()};
}

Vec pattern_phases(const Eigen::VectorXi& pattern) {
  Vec x(pattern.size());
  for (Eigen::Index i = 0; i < pattern.size(); ++i) {
    x[i] = (1.0 - static_cast<double>(pattern[i])) * (kPi / 2.0);
  }
  return x;
}

}  // namespace netctl
