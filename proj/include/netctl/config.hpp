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

#ifndef NETCTL_CONFIG_HPP_
#define NETCTL_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace netctl {

// Declarative experiment description, read from a flat key-value file with
// dotted sections (see docs/formats.md for the schema).  A `profile` key
// pulls in the pinned defaults of the built-in experiments; explicit keys
// override profile values.
struct ExperimentConfig {
  std::string profile;
  std::optional<std::uint64_t> seed;
  std::string subcommand;  // informational, recorded by result bundles

  std::string model_kind;  // "duffing" | "memory"
  int model_n = 0;
  double epsilon = 0.8;

  std::string scheme_kind;  // "fe" | "ti"
  double h = 0.0;
  double newton_tol = 1e-10;
  int newton_max_iter = 50;

  int horizon = 10;

  // "steady-from-random": uniform draw on [0, 0.5]^{Nn}, settled to a steady
  // state.  "letter-noisy": letter phases plus Gaussian noise, settled.
  // "explicit": literal state in init_values.
  std::string init_policy;
  std::string init_letter = "H";
  double noise_sigma = 1.0;
  std::vector<double> init_values;
  std::string settle_kind;  // defaults to the scheme kind
  double settle_h = 1e-2;
  double settle_tol = 1e-7;
  long settle_max_steps = 1000000;

  // "uniform": entries from U[desired_low, desired_high].  "letter": phase
  // encoding of desired_letter.  "explicit": literal state.
  std::string desired_policy;
  std::string desired_letter = "T";
  double desired_low = 0.0;
  double desired_high = 0.5;
  std::vector<double> desired_values;

  std::string budget_mode;  // "exactly" | "at-most"
  int budget_count = -1;

  double tol_grad = 1e-6;
  int max_iter = 500;

  int inner_iters = 100;
  int max_poll_rounds = 50;
  double improve_rtol = 1e-8;

  double relax_tol = 1e-6;
  int relax_max_iter = 500;

  int baseline_count = 200;
  long long exhaustive_cap = 1000000;

  // Settings for the `simulate` subcommand (uncontrolled response).
  std::string sim_kind;  // defaults to the settle kind
  double sim_h = 0.0;    // defaults to the settle h
  int sim_steps = 1500;

  int histogram_bins = 30;
};

// Parses and validates a config file.  Unknown keys, duplicates, malformed
// numbers, and invalid combinations raise ConfigError with the line number.
ExperimentConfig load_config(const std::string& path);

// Same, from an in-memory string (`source` names the origin in messages).
ExperimentConfig parse_config(const std::string& text,
                              const std::string& source);

// Canonical, fully resolved key-value form; load_config round-trips it.
std::string serialize_config(const ExperimentConfig& config);

// Fills the dependent scheme defaults a parsed file would carry: settling
// falls back to the control scheme, the uncontrolled-response scheme to the
// settling scheme.  Applied by parse_config, serialize_config, and
// resolve_experiment, so configs built in code behave like loaded ones.
void resolve_scheme_defaults(ExperimentConfig& config);

// Pinned defaults for the built-in experiments: "duffing-n10",
// "duffing-n60", "duffing-n20-ci", "memory-n25".
ExperimentConfig profile_defaults(const std::string& name);

}  // namespace netctl

#endif  // NETCTL_CONFIG_HPP_
