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

#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "netctl/csvio.hpp"
#include "netctl/errors.hpp"
#include "netctl/rng.hpp"
#include "netctl/svg.hpp"

namespace fs = std::filesystem;
using netctl::HistogramMarker;
using netctl::HistogramSpec;
using netctl::Vec;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("netctl-output-test-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("seventeen significant digits round-trip any double") {
  netctl::Rng rng(31415);
  for (int i = 0; i < 2000; ++i) {
    double v = 0.0;
    switch (i % 4) {
      case 0: v = rng.uniform(-1.0, 1.0); break;
      case 1: v = rng.normal() * 1e12; break;
      case 2: v = rng.normal() * 1e-12; break;
      default: v = rng.uniform(0.0, 1e300); break;
    }
    const std::string s = netctl::fmt_g17(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  CHECK(std::strtod(netctl::fmt_g17(0.0).c_str(), nullptr) == 0.0);
  CHECK(std::strtod(netctl::fmt_g17(-0.25).c_str(), nullptr) == -0.25);
  // The short form keeps 4 significant digits.
  CHECK(netctl::fmt_g4(1.23456) == "1.235");
  CHECK(netctl::fmt_g4(0.000123456) == "0.0001235");
}

TEST_CASE("csv writers emit the documented schemas") {
  TempDir tmp;

  netctl::MethodResult res;
  res.method = "algorithm1";
  res.selection = netctl::make_selection(4, {0, 2}, 2,
                                         netctl::BudgetMode::kExactly);
  res.objective = 1.5;
  res.error = 0.25;
  const auto result_path = (tmp.path / "result.csv").string();
  netctl::write_result_csv(result_path, {res});
  auto lines = lines_of(slurp(result_path));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "method,pi,J,e");
  CHECK(lines[1] == "algorithm1,1010,1.5,0.25");

  netctl::BaselineDistribution dist;
  dist.method = "exhaustive";
  netctl::BaselineEntry entry;
  entry.index = 3;
  entry.selection = res.selection;
  entry.objective = 0.5;
  entry.error = 0.125;
  dist.entries = {entry};
  const auto baseline_path = (tmp.path / "baseline.csv").string();
  netctl::write_baseline_csv(baseline_path, dist);
  lines = lines_of(slurp(baseline_path));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "index,pi,J,e");
  CHECK(lines[1] == "3,1010,0.5,0.125");

  const auto steps_path = (tmp.path / "error_steps.csv").string();
  netctl::write_error_steps_csv(
      steps_path, {{"algorithm1", {2.0, 1.0, 0.5}}, {"relax_round", {2.0}}});
  lines = lines_of(slurp(steps_path));
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "method,k,e_k");
  CHECK(lines[1] == "algorithm1,0,2");
  CHECK(lines[3] == "algorithm1,2,0.5");
  CHECK(lines[4] == "relax_round,0,2");

  netctl::PollRecord rec;
  rec.round = 2;
  rec.pi = "0110";
  rec.inner_j = 3.25;
  rec.accepted = true;
  const auto trace_path = (tmp.path / "trace.csv").string();
  netctl::write_trace_csv(trace_path, {rec});
  lines = lines_of(slurp(trace_path));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "poll_round,candidate_pi_bitstring,inner_J,accepted");
  CHECK(lines[1] == "2,0110,3.25,1");

  netctl::GradientReport report;
  report.gradient = netctl::Mat::Constant(1, 2, 2.0);
  report.fd_gradient = netctl::Mat::Constant(1, 2, 1.0);
  const auto grad_path = (tmp.path / "gradcheck.csv").string();
  netctl::write_gradcheck_csv(grad_path, report);
  lines = lines_of(slurp(grad_path));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "index,analytic,fd,rel_err");
  CHECK(lines[1] == "0,2,1,1");
}

TEST_CASE("trajectory files carry the time grid") {
  TempDir tmp;
  std::vector<Vec> states;
  for (int k = 0; k < 3; ++k) {
    states.push_back(Vec::Constant(2, static_cast<double>(k)));
  }
  const auto path = (tmp.path / "trajectory.csv").string();
  netctl::write_trajectory_csv(path, states, 0.5);
  const auto lines = lines_of(slurp(path));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "t,x_1,x_2");
  CHECK(lines[1] == "0,0,0");
  CHECK(lines[2] == "0.5,1,1");
  CHECK(lines[3] == "1,2,2");
}

TEST_CASE("csv numbers are lossless for harsh values") {
  TempDir tmp;
  netctl::MethodResult res;
  res.method = "algorithm1";
  res.selection =
      netctl::make_selection(2, {0}, 1, netctl::BudgetMode::kExactly);
  res.objective = 0.1 + 0.2;  // 0.30000000000000004
  res.error = 1.0 / 3.0;
  const auto path = (tmp.path / "result.csv").string();
  netctl::write_result_csv(path, {res});
  const auto lines = lines_of(slurp(path));
  const auto last_comma = lines[1].rfind(',');
  const auto prev_comma = lines[1].rfind(',', last_comma - 1);
  const double j = std::strtod(
      lines[1].substr(prev_comma + 1, last_comma - prev_comma - 1).c_str(),
      nullptr);
  const double e = std::strtod(lines[1].substr(last_comma + 1).c_str(),
                               nullptr);
  CHECK(j == res.objective);
  CHECK(e == res.error);
}

TEST_CASE("histogram handles a single-value distribution") {
  const std::string svg = netctl::render_histogram({1.25}, HistogramSpec{});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  // Degenerate span widens around the value instead of dividing by zero,
  // leaving exactly one occupied bin.
  CHECK(count_occurrences(svg, "fill=\"#9db8d2\"") == 1);
}

TEST_CASE("histogram output is deterministic and self-contained") {
  std::vector<double> values;
  netctl::Rng rng(5150);
  for (int i = 0; i < 500; ++i) values.push_back(rng.normal());
  HistogramSpec spec;
  spec.bins = 24;
  spec.markers = {{"algorithm1 e", -0.5, "red"},
                  {"relax_round e", 0.75, "black"}};
  const std::string a = netctl::render_histogram(values, spec);
  const std::string b = netctl::render_histogram(values, spec);
  CHECK(a == b);
  CHECK(a.find("algorithm1 e = -0.5") != std::string::npos);
  CHECK(a.find("relax_round e = 0.75") != std::string::npos);
  CHECK(a.find("#cc2222") != std::string::npos);  // red marker role
  CHECK(a.find("final control error e") != std::string::npos);
  // Self-contained: no external references.
  CHECK(a.find("href") == std::string::npos);
  std::string stripped = a;  // the SVG namespace is the only URL allowed
  for (size_t pos; (pos = stripped.find("http://www.w3.org")) !=
                   std::string::npos;) {
    stripped.erase(pos, 17);
  }
  CHECK(stripped.find("http://") == std::string::npos);
  CHECK(count_occurrences(a, "fill=\"#9db8d2\"") <= 24);
  CHECK(count_occurrences(a, "fill=\"#9db8d2\"") >= 10);
}

TEST_CASE("histogram labels carry four significant digits") {
  const std::string svg = netctl::render_histogram(
      {0.0, 1.0, 2.0, 3.0},
      HistogramSpec{10, "err", {{"m", 1.234567, "red"}}});
  CHECK(svg.find("m = 1.235") != std::string::npos);
}

TEST_CASE("histogram rejects degenerate input") {
  CHECK_THROWS_AS(netctl::render_histogram({}, HistogramSpec{}),
                  netctl::Error);
  HistogramSpec bad;
  bad.bins = 0;
  CHECK_THROWS_AS(netctl::render_histogram({1.0}, bad), netctl::Error);
  HistogramSpec nan_marker;
  nan_marker.markers = {{"m", std::nan(""), "red"}};
  CHECK_THROWS_AS(netctl::render_histogram({1.0, 2.0}, nan_marker),
                  netctl::Error);
}

TEST_CASE("markers beyond the data range stay inside the canvas") {
  std::vector<double> values = {1.0, 1.5, 2.0};
  HistogramSpec spec;
  spec.markers = {{"far", 50.0, "black"}};
  const std::string svg = netctl::render_histogram(values, spec);
  // The marker line is clamped into the plot area: every x coordinate in
  // the file must stay within the canvas width.
  size_t pos = 0;
  while ((pos = svg.find("x1=\"", pos)) != std::string::npos) {
    const double x = std::strtod(svg.c_str() + pos + 4, nullptr);
    CHECK(x >= 0.0);
    CHECK(x <= 640.0);
    ++pos;
  }
}

TEST_CASE("file writers raise IoError on unwritable paths") {
  CHECK_THROWS_AS(
      netctl::write_text_file("/nonexistent-dir/out.txt", "hello"),
      netctl::IoError);
  CHECK_THROWS_AS(
      netctl::emit_histogram({1.0}, HistogramSpec{},
                             "/nonexistent-dir/h.svg"),
      netctl::IoError);
}

TEST_CASE("text writer is binary-exact") {
  TempDir tmp;
  const std::string payload = "line1\nline2\n\xff\x00 tail";
  const std::string with_nul(payload.c_str(), 13);  // embeds raw bytes
  const auto path = (tmp.path / "blob.txt").string();
  netctl::write_text_file(path, with_nul);
  CHECK(slurp(path) == with_nul);
}
