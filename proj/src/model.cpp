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

#include "netctl/model.hpp"

#include "netctl/errors.hpp"

namespace netctl {

Mat NetworkModel::actuation(const Vec& weights) const {
  if (weights.size() != nodes) {
    throw Error("actuation: weight vector must have one entry per node");
  }
  Mat b = Mat::Zero(state_dim(), nodes);
  for (int i = 0; i < nodes; ++i) {
    b(input_row(i), i) = weights[i];
  }
  return b;
}

ActuationMap ActuationMap::parametrized(const NetworkModel& model,
                                        const Vec& weights) {
  if (weights.size() != model.nodes) {
    throw Error("actuation map: weight vector must have one entry per node");
  }
  ActuationMap map;
  map.width = model.nodes;
  for (int i = 0; i < model.nodes; ++i) {
    if (weights[i] == 0.0) continue;
    map.state_rows.push_back(model.input_row(i));
    map.control_rows.push_back(i);
    map.weights.push_back(weights[i]);
  }
  return map;
}

ActuationMap ActuationMap::reduced(const NetworkModel& model,
                                   const Selection& sel) {
  if (sel.size() != model.nodes) {
    throw Error("actuation map: selection size does not match node count");
  }
  ActuationMap map;
  const std::vector<int> active = sel.active_indices();
  map.width = static_cast<int>(active.size());
  for (int j = 0; j < map.width; ++j) {
    map.state_rows.push_back(model.input_row(active[static_cast<size_t>(j)]));
    map.control_rows.push_back(j);
    map.weights.push_back(1.0);
  }
  return map;
}

void ActuationMap::accumulate(const Mat& controls, int col, Vec& out) const {
  for (int c = 0; c < channels(); ++c) {
    out[state_rows[static_cast<size_t>(c)]] +=
        weights[static_cast<size_t>(c)] *
        controls(control_rows[static_cast<size_t>(c)], col);
  }
}

void ActuationMap::accumulate_transpose(const Vec& lambda, double scale,
                                        Mat& grad, int col) const {
  for (int c = 0; c < channels(); ++c) {
    grad(control_rows[static_cast<size_t>(c)], col) +=
        scale * weights[static_cast<size_t>(c)] *
        lambda[state_rows[static_cast<size_t>(c)]];
  }
}

Mat expand_controls(const Mat& reduced, const Selection& sel) {
  const std::vector<int> active = sel.active_indices();
  if (reduced.rows() != static_cast<Eigen::Index>(active.size())) {
    throw Error("expand_controls: row count does not match active count");
  }
  Mat full = Mat::Zero(sel.size(), reduced.cols());
  for (size_t j = 0; j < active.size(); ++j) {
    full.row(active[j]) = reduced.row(static_cast<Eigen::Index>(j));
  }
  return full;
}

Mat restrict_controls(const Mat& full, const Selection& sel) {
  const std::vector<int> active = sel.active_indices();
  if (full.rows() != sel.size()) {
    throw Error("restrict_controls: row count does not match node count");
  }
  Mat reduced(static_cast<Eigen::Index>(active.size()), full.cols());
  for (size_t j = 0; j < active.size(); ++j) {
    reduced.row(static_cast<Eigen::Index>(j)) = full.row(active[j]);
  }
  return reduced;
}

}  // namespace netctl
