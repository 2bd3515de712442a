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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "netctl/cli.hpp"

namespace fs = std::filesystem;
using netctl::RunConfig;
namespace exit_code = netctl::exit_code;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() /
           ("netctl-cli-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path write_config(const fs::path& dir, const std::string& name,
                      const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream out(p);
  out << text;
  return p;
}

// Small Duffing problem that solves in well under a second.
const char* kTinyConfig =
    "model.kind = duffing\n"
    "model.n = 5\n"
    "scheme.kind = fe\n"
    "scheme.h = 0.01\n"
    "horizon.steps = 5\n"
    "init.policy = steady-from-random\n"
    "desired.policy = uniform\n"
    "desired.low = 0\n"
    "desired.high = 0.5\n"
    "budget.mode = exactly\n"
    "budget.count = 2\n"
    "solver.tol_grad = 1e-7\n"
    "baseline.count = 5\n"
    "sim.steps = 40\n"
    "seed = 31\n";

RunConfig base_run(const std::string& sub, const fs::path& config,
                   const fs::path& out) {
  RunConfig rc;
  rc.subcommand = sub;
  rc.config_path = config.string();
  rc.out_dir = out.string();
  rc.workers = 1;
  return rc;
}

bool same_bytes(const fs::path& a, const fs::path& b) {
  return slurp(a) == slurp(b);
}

}  // namespace

TEST_CASE("usage errors come back as exit 64") {
  TempDir tmp("usage");
  const auto cfg = write_config(tmp.path, "tiny.cfg", kTinyConfig);
  RunConfig rc = base_run("explode", cfg, tmp.path / "out");
  CHECK(netctl::run(rc) == exit_code::kUsage);

  rc = base_run("select", cfg, tmp.path / "out2");
  rc.config_path.clear();
  CHECK(netctl::run(rc) == exit_code::kUsage);

  rc = base_run("select", cfg, "");
  CHECK(netctl::run(rc) == exit_code::kUsage);
}

TEST_CASE("config problems come back as exit 65") {
  TempDir tmp("config");
  RunConfig rc = base_run("select", tmp.path / "missing.cfg",
                          tmp.path / "out");
  CHECK(netctl::run(rc) == exit_code::kConfig);
  CHECK_FALSE(fs::exists(tmp.path / "out"));

  const auto bad = write_config(tmp.path, "bad.cfg",
                                "model.kind = duffing\nmodel.n = -3\n");
  rc = base_run("select", bad, tmp.path / "out");
  CHECK(netctl::run(rc) == exit_code::kConfig);

  // A config without a seed needs one on the command line.  The failure is
  // discovered while resolving the experiment, so an error bundle is left
  // behind; the seeded retry targets a fresh directory.
  std::string noseed(kTinyConfig);
  noseed.erase(noseed.find("seed = 31"));
  const auto unseeded = write_config(tmp.path, "noseed.cfg", noseed);
  rc = base_run("select", unseeded, tmp.path / "unseeded");
  CHECK(netctl::run(rc) == exit_code::kConfig);
  CHECK(fs::exists(tmp.path / "unseeded" / "error.txt"));
  rc = base_run("select", unseeded, tmp.path / "seeded");
  rc.seed = 7;
  CHECK(netctl::run(rc) == exit_code::kOk);
}

TEST_CASE("select produces a complete, reproducible bundle") {
  TempDir tmp("select");
  const auto cfg = write_config(tmp.path, "tiny.cfg", kTinyConfig);
  const fs::path out = tmp.path / "out";
  RunConfig rc = base_run("select", cfg, out);
  REQUIRE(netctl::run(rc) == exit_code::kOk);

  for (const char* name : {"spec.cfg", "model.txt", "result.csv",
                           "trace.csv", "error_steps.csv", "log.txt"}) {
    CHECK(fs::exists(out / name));
  }
  CHECK_FALSE(fs::exists(out.string() + ".inprogress"));
  const std::string result = slurp(out / "result.csv");
  CHECK(result.find("algorithm1") != std::string::npos);

  // Re-running the emitted spec reproduces the result bit for bit.
  const fs::path out2 = tmp.path / "replay";
  RunConfig replay = base_run("select", out / "spec.cfg", out2);
  REQUIRE(netctl::run(replay) == exit_code::kOk);
  CHECK(same_bytes(out / "result.csv", out2 / "result.csv"));
  CHECK(same_bytes(out / "trace.csv", out2 / "trace.csv"));
  CHECK(same_bytes(out / "error_steps.csv", out2 / "error_steps.csv"));
  CHECK(same_bytes(out / "model.txt", out2 / "model.txt"));
}

TEST_CASE("an existing bundle is preserved unless forced") {
  TempDir tmp("force");
  const auto cfg = write_config(tmp.path, "tiny.cfg", kTinyConfig);
  const fs::path out = tmp.path / "out";
  RunConfig rc = base_run("select", cfg, out);
  REQUIRE(netctl::run(rc) == exit_code::kOk);
  const std::string before = slurp(out / "result.csv");

  CHECK(netctl::run(rc) == exit_code::kBundleExists);
  CHECK(slurp(out / "result.csv") == before);

  rc.force = true;
  CHECK(netctl::run(rc) == exit_code::kOk);
  CHECK(slurp(out / "result.csv") == before);
}

TEST_CASE("figure bundles are byte-identical across reruns and workers") {
  TempDir tmp("figure");
  const auto cfg = write_config(tmp.path, "tiny.cfg", kTinyConfig);
  const fs::path out1 = tmp.path / "a";
  const fs::path out2 = tmp.path / "b";

  RunConfig rc1 = base_run("figure", cfg, out1);
  RunConfig rc2 = base_run("figure", cfg, out2);
  rc2.workers = 3;  // parallel scoring must not change any output byte
  REQUIRE(netctl::run(rc1) == exit_code::kOk);
  REQUIRE(netctl::run(rc2) == exit_code::kOk);

  for (const char* name :
       {"result.csv", "baseline.csv", "error_steps.csv", "trace.csv",
        "histogram.svg", "spec.cfg", "model.txt"}) {
    INFO("file: ", name);
    REQUIRE(fs::exists(out1 / name));
    REQUIRE(fs::exists(out2 / name));
    CHECK(same_bytes(out1 / name, out2 / name));
  }

  // Both methods appear in the results table.
  const std::string result = slurp(out1 / "result.csv");
  CHECK(result.find("algorithm1") != std::string::npos);
  CHECK(result.find("relax_round") != std::string::npos);
}

TEST_CASE("simulate writes the uncontrolled trajectory") {
  TempDir tmp("simulate");
  const auto cfg = write_config(tmp.path, "tiny.cfg", kTinyConfig);
  const fs::path out = tmp.path / "out";
  RunConfig rc = base_run("simulate", cfg, out);
  REQUIRE(netctl::run(rc) == exit_code::kOk);
  const std::string traj = slurp(out / "trajectory.csv");
  std::istringstream in(traj);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,x_1,x_2,x_3,x_4,x_5,x_6,x_7,x_8,x_9,x_10");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 41);  // sim.steps + initial state
}

TEST_CASE("a numerically exploding run leaves an error record") {
  TempDir tmp("blowup");
  std::string text(kTinyConfig);
  text += "sim.kind = fe\nsim.h = 0.5\n";
  const auto cfg = write_config(tmp.path, "explode.cfg", text);
  const fs::path out = tmp.path / "out";
  RunConfig rc = base_run("simulate", cfg, out);
  CHECK(netctl::run(rc) == exit_code::kSolver);

  REQUIRE(fs::exists(out / "error.txt"));
  const std::string record = slurp(out / "error.txt");
  CHECK(record.find("error = simulation") != std::string::npos);
  CHECK(record.find("exit_code = 70") != std::string::npos);
  // The steps computed before the overflow are preserved.
  CHECK(fs::exists(out / "trajectory.csv"));
  CHECK(fs::exists(out / "log.txt"));
}

TEST_CASE("exhaustive enumeration respects the configured cap") {
  TempDir tmp("cap");
  std::string text(kTinyConfig);
  text += "baseline.cap = 5\n";  // C(5,2) = 10 > 5
  const auto cfg = write_config(tmp.path, "capped.cfg", text);
  const fs::path out = tmp.path / "out";
  RunConfig rc = base_run("exhaustive", cfg, out);
  CHECK(netctl::run(rc) == exit_code::kCapExceeded);
  REQUIRE(fs::exists(out / "error.txt"));
  CHECK(slurp(out / "error.txt").find("exit_code = 69") != std::string::npos);

  // Without the tight cap the same run enumerates C(5,2) selections.
  const auto cfg2 = write_config(tmp.path, "open.cfg", kTinyConfig);
  const fs::path out2 = tmp.path / "out2";
  rc = base_run("exhaustive", cfg2, out2);
  REQUIRE(netctl::run(rc) == exit_code::kOk);
  std::istringstream in(slurp(out2 / "baseline.csv"));
  std::string line;
  int rows = -1;  // discount the header
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 10);
}

TEST_CASE("random baseline honors the requested count") {
  TempDir tmp("random");
  const auto cfg = write_config(tmp.path, "tiny.cfg", kTinyConfig);
  const fs::path out = tmp.path / "out";
  RunConfig rc = base_run("random", cfg, out);
  REQUIRE(netctl::run(rc) == exit_code::kOk);
  std::istringstream in(slurp(out / "baseline.csv"));
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 5);
}

TEST_CASE("gradient checks run standalone and pass") {
  TempDir tmp("gradcheck");
  std::string text(kTinyConfig);
  const auto cfg = write_config(tmp.path, "tiny.cfg", text);
  const fs::path out = tmp.path / "out";
  RunConfig rc = base_run("gradcheck", cfg, out);
  REQUIRE(netctl::run(rc) == exit_code::kOk);
  int csvs = 0;
  for (const auto& entry : fs::directory_iterator(out)) {
    if (entry.path().extension() == ".csv") ++csvs;
  }
  CHECK(csvs == 4);
}

TEST_CASE("the seed flag overrides the config seed") {
  TempDir tmp("seed");
  const auto cfg = write_config(tmp.path, "tiny.cfg", kTinyConfig);
  RunConfig rc = base_run("select", cfg, tmp.path / "a");
  REQUIRE(netctl::run(rc) == exit_code::kOk);
  rc.out_dir = (tmp.path / "b").string();
  rc.seed = 99;
  REQUIRE(netctl::run(rc) == exit_code::kOk);
  CHECK_FALSE(same_bytes(tmp.path / "a" / "result.csv",
                         tmp.path / "b" / "result.csv"));
  // The emitted spec records the effective seed.
  CHECK(slurp(tmp.path / "b" / "spec.cfg").find("seed = 99") !=
        std::string::npos);
}
