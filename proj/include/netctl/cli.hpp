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

#ifndef NETCTL_CLI_HPP_
#define NETCTL_CLI_HPP_

#include <cstdint>
#include <optional>
#include <string>

namespace netctl {

struct RunConfig {
  std::string subcommand;
  std::string config_path;
  std::optional<std::uint64_t> seed;  // overrides the config's `seed` key
  std::string out_dir;
  int workers = 0;  // 0 = logical cores
  bool force = false;
};

// Exit codes (sysexits-inspired), also listed in --help and docs/formats.md.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kUsage = 64;
inline constexpr int kConfig = 65;
inline constexpr int kInfeasible = 66;
inline constexpr int kCapExceeded = 69;
inline constexpr int kSolver = 70;
inline constexpr int kBundleExists = 73;
inline constexpr int kIo = 74;
}  // namespace exit_code

// One-line-per-code table for --help output.
std::string exit_code_help();

// Executes one subcommand end to end: loads the config, resolves the
// experiment, runs the pipelines, and commits the results bundle.  The
// bundle is staged in a scratch directory and renamed into place, so a
// partially written bundle is never observed under the final name; an
// existing bundle is refused unless `force`.  Failures after staging leave
// a bundle containing error.txt (a machine-readable record) and log.txt.
// Returns an exit_code value; never throws.
int run(const RunConfig& config);

}  // namespace netctl

#endif  // NETCTL_CLI_HPP_
