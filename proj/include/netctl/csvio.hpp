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

#ifndef NETCTL_CSVIO_HPP_
#define NETCTL_CSVIO_HPP_

#include <string>
#include <vector>

#include "netctl/adjoint.hpp"
#include "netctl/pipelines.hpp"

namespace netctl {

// Shortest round-trippable decimal form (17 significant digits).
std::string fmt_g17(double v);
// 4 significant digits, for figure labels.
std::string fmt_g4(double v);

// Writers below create `path`, throwing IoError on failure.  All numeric
// columns use fmt_g17 so outputs are byte-reproducible and lossless.

// result.csv: `method,pi,J,e`, one row per method.
void write_result_csv(const std::string& path,
                      const std::vector<MethodResult>& results);

// baseline.csv: `index,pi,J,e`, one row per evaluated selection.
void write_baseline_csv(const std::string& path,
                        const BaselineDistribution& dist);

// error_steps.csv: `method,k,e_k` in long format, k = 0..T per method.
struct ErrorSeries {
  std::string method;
  std::vector<double> errors;
};
void write_error_steps_csv(const std::string& path,
                           const std::vector<ErrorSeries>& series);

// trace.csv: `poll_round,candidate_pi_bitstring,inner_J,accepted`.
void write_trace_csv(const std::string& path,
                     const std::vector<PollRecord>& trace);

// gradcheck CSV: `index,analytic,fd,rel_err`, one row per coordinate.
void write_gradcheck_csv(const std::string& path, const GradientReport& report);

// Trajectory CSV: header `t,x_1,...,x_{Nn}`, one row per grid point,
// t = k * h.
void write_trajectory_csv(const std::string& path,
                          const std::vector<Vec>& states, double h);

// Structured text description of the resolved model (graph geometry and all
// coupling parameters, or the stored patterns), full precision.
void write_model_file(const std::string& path, const Experiment& ex);

// Plain file write helper with the same IoError behavior.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace netctl

#endif  // NETCTL_CSVIO_HPP_
