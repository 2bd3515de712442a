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

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "netctl/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "netctl - joint control-node selection and open-loop control design "
      "for nonlinear dynamical networks"};
  app.footer(netctl::exit_code_help());
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> subcommands = {
      {"simulate", "Integrate the uncontrolled network response"},
      {"select", "Run the control node selection search (Algorithm 1)"},
      {"compare", "Run the relax-and-round comparison method"},
      {"exhaustive", "Evaluate every selection at the exact budget"},
      {"random", "Evaluate random feasible selections"},
      {"gradcheck", "Verify adjoint gradients against finite differences"},
      {"figure", "Composite: select + compare + baseline + histogram"},
  };

  netctl::RunConfig rc;
  std::uint64_t seed = 0;
  for (const auto& [name, help] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", rc.config_path, "Experiment config file")
        ->required();
    sub->add_option("--seed", seed,
                    "Master seed (overrides the config's `seed` key)");
    sub->add_option("--out", rc.out_dir, "Results bundle directory")
        ->required();
    sub->add_option("--workers", rc.workers,
                    "Worker threads (default: logical cores)");
    sub->add_flag("--force", rc.force, "Replace an existing bundle");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message and usage hint
    return netctl::exit_code::kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  rc.subcommand = sub->get_name();
  if (sub->count("--seed") > 0) rc.seed = seed;
  return netctl::run(rc);
}
