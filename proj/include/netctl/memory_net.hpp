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

#ifndef NETCTL_MEMORY_NET_HPP_
#define NETCTL_MEMORY_NET_HPP_

#include <vector>

#include "netctl/model.hpp"

namespace netctl {

// Oscillatory associative memory: N identical phase oscillators with
// Hebbian couplings and a second-harmonic term that stabilizes the stored
// patterns as attractors:
//
//   x_i' = sum_j C_ij sin(x_j - x_i) + (eps/N) sum_j sin(2 (x_j - x_i))
//
// n = 1, so B(pi) = diag(pi).
struct MemoryParams {
  std::vector<Eigen::VectorXi> patterns;  // entries in {-1,+1}
  Mat coupling;                           // Hebb matrix C
  double epsilon = 0.0;
};

// C_ij = (1/N) sum_mu xi_i^mu xi_j^mu.  Rejects entries outside {-1,+1}.
Mat hebb_weights(const std::vector<Eigen::VectorXi>& patterns);

MemoryParams make_memory_params(const std::vector<Eigen::VectorXi>& patterns,
                                double epsilon);

NetworkModel memory_model(const MemoryParams& params);

// The three 5x5 letter bitmaps stored by the benchmark network, row-major,
// foreground pixels = +1.
Eigen::VectorXi letter_h();
Eigen::VectorXi letter_t();
Eigen::VectorXi letter_l();
std::vector<Eigen::VectorXi> letter_patterns();

// Phase encoding of a +-1 pattern: x_i = (1 - xi_i) * pi/2, so +1 -> 0 and
// -1 -> pi.
Vec pattern_phases(const Eigen::VectorXi& pattern);

}  // namespace netctl

#endif  // NETCTL_MEMORY_NET_HPP_
