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

#ifndef NETCTL_MODEL_HPP_
#define NETCTL_MODEL_HPP_

#include <Eigen/Core>
#include <functional>

#include "netctl/selection.hpp"

namespace netctl {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// A controlled network: N nodes with n states each, drift f(x) on the full
// state in R^{Nn}, and a one-dimensional input per node entering the last
// state of its block.  B(pi) is block diagonal with i-th block
// col(0, ..., 0, pi_i); for n = 1 it reduces to diag(pi).
struct NetworkModel {
  int nodes = 0;     // N
  int node_dim = 1;  // n
  std::function<Vec(const Vec&)> drift;
  std::function<Mat(const Vec&)> jacobian;

  int state_dim() const { return nodes * node_dim; }
  // Row of the state vector that node i's input drives.
  int input_row(int i) const { return i * node_dim + node_dim - 1; }
  // Dense B(weights) in R^{Nn x N}; weights may be binary (pi) or relaxed
  // (alpha).
  Mat actuation(const Vec& weights) const;
};

// Flattened description of which control channels feed which state rows.
// Both the parametrized form (width-N inputs scaled by pi or alpha) and the
// reduced form (width-M inputs on the selected columns) lower to this, and
// both paths accumulate terms in ascending node order so a reduced problem
// evaluates bit-identically to its parametrized equivalent.
struct ActuationMap {
  int width = 0;                  // columns of the control sequence
  std::vector<int> state_rows;    // row each channel drives
  std::vector<int> control_rows;  // row of the control matrix it reads
  std::vector<double> weights;

  static ActuationMap parametrized(const NetworkModel& model,
                                   const Vec& weights);
  static ActuationMap reduced(const NetworkModel& model, const Selection& sel);

  int channels() const { return static_cast<int>(state_rows.size()); }
  // out += B * z where z is column `col` of `controls`.
  void accumulate(const Mat& controls, int col, Vec& out) const;
  // out += scale * B^T lambda, written onto column `col` of `grad`.
  void accumulate_transpose(const Vec& lambda, double scale, Mat& grad,
                            int col) const;
};

// Expands reduced controls (M x K) to full width (N x K) on the selection's
// active columns.
Mat expand_controls(const Mat& reduced, const Selection& sel);
// Extracts the active rows of full-width controls into reduced form.
Mat restrict_controls(const Mat& full, const Selection& sel);

}  // namespace netctl

#endif  // NETCTL_MODEL_HPP_
