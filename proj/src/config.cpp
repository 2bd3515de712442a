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

#include "netctl/config.hpp"

#include <cerrno>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "netctl/errors.hpp"

namespace netctl {
namespace {

struct RawEntry {
  std::string value;
  int line = 0;
  bool used = false;
};

using RawMap = std::map<std::string, RawEntry>;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& source, int line,
                       const std::string& msg) {
  throw ConfigError(line, source + ":" + std::to_string(line) + ": " + msg);
}

RawMap tokenize(const std::string& text, const std::string& source) {
  RawMap raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(source, lineno, "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(source, lineno, "empty key");
    if (value.empty()) fail(source, lineno, "empty value for key '" + key + "'");
    if (raw.count(key) != 0) {
      fail(source, lineno, "duplicate key '" + key + "' (first at line " +
                               std::to_string(raw[key].line) + ")");
    }
    raw[key] = {value, lineno, false};
  }
  return raw;
}

class Reader {
 public:
  Reader(RawMap& raw, const std::string& source) : raw_(raw), source_(source) {}

  bool has(const std::string& key) const { return raw_.count(key) != 0; }

  void take_string(const std::string& key, std::string& out) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return;
    it->second.used = true;
    out = it->second.value;
  }

  void take_double(const std::string& key, double& out) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return;
    it->second.used = true;
    out = parse_double(it->second.value, it->second.line, key);
  }

  void take_int(const std::string& key, int& out) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return;
    it->second.used = true;
    const long long v = parse_ll(it->second.value, it->second.line, key);
    if (v < INT_MIN || v > INT_MAX) {
      fail(source_, it->second.line, "value of '" + key + "' out of range");
    }
    out = static_cast<int>(v);
  }

  void take_long(const std::string& key, long& out) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return;
    it->second.used = true;
    out = static_cast<long>(parse_ll(it->second.value, it->second.line, key));
  }

  void take_llong(const std::string& key, long long& out) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return;
    it->second.used = true;
    out = parse_ll(it->second.value, it->second.line, key);
  }

  void take_seed(const std::string& key, std::optional<std::uint64_t>& out) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return;
    it->second.used = true;
    errno = 0;
    char* end = nullptr;
    const unsigned long long v =
        std::strtoull(it->second.value.c_str(), &end, 10);
    if (errno != 0 || end == it->second.value.c_str() || *end != '\0') {
      fail(source_, it->second.line,
           "value of '" + key + "' is not an unsigned integer");
    }
    out = static_cast<std::uint64_t>(v);
  }

  void take_values(const std::string& key, std::vector<double>& out) {
    auto it = raw_.find(key);
    if (it == raw_.end()) return;
    it->second.used = true;
    out.clear();
    std::istringstream vs(it->second.value);
    std::string tok;
    while (vs >> tok) {
      out.push_back(parse_double(tok, it->second.line, key));
    }
    if (out.empty()) {
      fail(source_, it->second.line, "no numbers in '" + key + "'");
    }
  }

  void reject_unused() const {
    for (const auto& [key, entry] : raw_) {
      if (!entry.used) {
        fail(source_, entry.line, "unknown key '" + key + "'");
      }
    }
  }

  int line_of(const std::string& key) const {
    auto it = raw_.find(key);
    return it == raw_.end() ? 0 : it->second.line;
  }

 private:
  double parse_double(const std::string& text, int line,
                      const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (errno != 0 || end == text.c_str() || *end != '\0') {
      fail(source_, line, "value of '" + key + "' is not a number");
    }
    return v;
  }

  long long parse_ll(const std::string& text, int line,
                     const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (errno != 0 || end == text.c_str() || *end != '\0') {
      fail(source_, line, "value of '" + key + "' is not an integer");
    }
    return v;
  }

  RawMap& raw_;
  std::string source_;
};

ExperimentConfig duffing_profile(int n) {
  ExperimentConfig c;
  c.model_kind = "duffing";
  c.model_n = n;
  c.scheme_kind = "ti";
  c.h = 1e-4;
  c.horizon = 10;
  c.init_policy = "steady-from-random";
  c.settle_kind = "ti";
  c.settle_h = 1e-2;
  c.desired_policy = "uniform";
  c.desired_low = 0.0;
  c.desired_high = 0.5;
  c.budget_mode = "exactly";
  c.sim_steps = 1500;
  return c;
}

void check(bool ok, const std::string& source, int line,
           const std::string& msg) {
  if (!ok) fail(source, line, msg);
}

void validate(const ExperimentConfig& c, const Reader& reader,
              const std::string& source) {
  auto ln = [&](const std::string& key) { return reader.line_of(key); };

  check(c.model_kind == "duffing" || c.model_kind == "memory", source,
        ln("model.kind"), "model.kind must be 'duffing' or 'memory'");
  check(c.model_n >= 2, source, ln("model.n"), "model.n must be at least 2");
  if (c.model_kind == "memory") {
    check(c.model_n == 25, source, ln("model.n"),
          "the associative memory network stores 5x5 letters; model.n must "
          "be 25");
    check(c.epsilon >= 0.0, source, ln("model.epsilon"),
          "model.epsilon must be nonnegative");
  }
  check(c.scheme_kind == "fe" || c.scheme_kind == "ti", source,
        ln("scheme.kind"), "scheme.kind must be 'fe' or 'ti'");
  check(c.h > 0.0, source, ln("scheme.h"), "scheme.h must be positive");
  check(c.newton_tol > 0.0, source, ln("scheme.newton_tol"),
        "scheme.newton_tol must be positive");
  check(c.newton_max_iter >= 1, source, ln("scheme.newton_max_iter"),
        "scheme.newton_max_iter must be at least 1");
  check(c.horizon >= 1, source, ln("horizon.steps"),
        "horizon.steps must be at least 1");

  check(c.init_policy == "steady-from-random" ||
            c.init_policy == "letter-noisy" || c.init_policy == "explicit",
        source, ln("init.policy"),
        "init.policy must be steady-from-random, letter-noisy, or explicit");
  if (c.init_policy == "letter-noisy") {
    check(c.model_kind == "memory", source, ln("init.policy"),
          "init.policy letter-noisy requires the memory model");
    check(c.noise_sigma >= 0.0, source, ln("init.noise_sigma"),
          "init.noise_sigma must be nonnegative");
  }
  if (c.init_policy == "explicit") {
    check(!c.init_values.empty(), source, ln("init.policy"),
          "init.policy explicit requires init.values");
  }
  check(c.init_letter == "H" || c.init_letter == "T" || c.init_letter == "L",
        source, ln("init.letter"), "init.letter must be H, T, or L");
  check(c.settle_kind.empty() || c.settle_kind == "fe" ||
            c.settle_kind == "ti",
        source, ln("settle.kind"), "settle.kind must be 'fe' or 'ti'");
  check(c.settle_h > 0.0, source, ln("settle.h"),
        "settle.h must be positive");
  check(c.settle_tol > 0.0, source, ln("settle.tol"),
        "settle.tol must be positive");
  check(c.settle_max_steps >= 1, source, ln("settle.max_steps"),
        "settle.max_steps must be at least 1");

  check(c.desired_policy == "uniform" || c.desired_policy == "letter" ||
            c.desired_policy == "explicit",
        source, ln("desired.policy"),
        "desired.policy must be uniform, letter, or explicit");
  if (c.desired_policy == "letter") {
    check(c.model_kind == "memory", source, ln("desired.policy"),
          "desired.policy letter requires the memory model");
  }
  if (c.desired_policy == "explicit") {
    check(!c.desired_values.empty(), source, ln("desired.policy"),
          "desired.policy explicit requires desired.values");
  }
  check(c.desired_letter == "H" || c.desired_letter == "T" ||
            c.desired_letter == "L",
        source, ln("desired.letter"), "desired.letter must be H, T, or L");
  check(c.desired_high >= c.desired_low, source, ln("desired.high"),
        "desired.high must be at least desired.low");

  check(c.budget_mode == "exactly" || c.budget_mode == "at-most", source,
        ln("budget.mode"), "budget.mode must be 'exactly' or 'at-most'");
  check(c.budget_count >= 0 && c.budget_count <= c.model_n, source,
        ln("budget.count"), "budget.count must lie in 0..model.n");

  check(c.tol_grad > 0.0, source, ln("solver.tol_grad"),
        "solver.tol_grad must be positive");
  check(c.max_iter >= 1, source, ln("solver.max_iter"),
        "solver.max_iter must be at least 1");
  check(c.inner_iters >= 1, source, ln("mino.inner_iters"),
        "mino.inner_iters must be at least 1");
  check(c.max_poll_rounds >= 0, source, ln("mino.max_poll_rounds"),
        "mino.max_poll_rounds must be nonnegative");
  check(c.improve_rtol >= 0.0, source, ln("mino.improve_rtol"),
        "mino.improve_rtol must be nonnegative");
  check(c.relax_tol > 0.0, source, ln("relax.tol"),
        "relax.tol must be positive");
  check(c.relax_max_iter >= 1, source, ln("relax.max_iter"),
        "relax.max_iter must be at least 1");
  check(c.baseline_count >= 1, source, ln("baseline.count"),
        "baseline.count must be at least 1");
  check(c.exhaustive_cap >= 1, source, ln("baseline.cap"),
        "baseline.cap must be at least 1");
  check(c.sim_kind.empty() || c.sim_kind == "fe" || c.sim_kind == "ti",
        source, ln("sim.kind"), "sim.kind must be 'fe' or 'ti'");
  check(c.sim_steps >= 1, source, ln("sim.steps"),
        "sim.steps must be at least 1");
  check(c.histogram_bins >= 1, source, ln("histogram.bins"),
        "histogram.bins must be at least 1");
}

}  // namespace

ExperimentConfig profile_defaults(const std::string& name) {
  if (name == "duffing-n10") {
    ExperimentConfig c = duffing_profile(10);
    c.profile = name;
    c.budget_count = 4;
    c.baseline_count = 200;
    return c;
  }
  if (name == "duffing-n60") {
    ExperimentConfig c = duffing_profile(60);
    c.profile = name;
    c.budget_mode = "at-most";
    c.budget_count = 30;
    c.baseline_count = 500;
    return c;
  }
  if (name == "duffing-n20-ci") {
    ExperimentConfig c = duffing_profile(20);
    c.profile = name;
    c.budget_mode = "at-most";
    c.budget_count = 10;
    c.baseline_count = 100;
    // Keep CI figure runs on the sampled-baseline path: enumerating
    // C(20,k) subsets would dwarf the intended runtime of this profile.
    c.exhaustive_cap = 5000;
    return c;
  }
  if (name == "memory-n25") {
    ExperimentConfig c;
    c.profile = name;
    c.model_kind = "memory";
    c.model_n = 25;
    c.epsilon = 0.8;
    c.scheme_kind = "fe";
    c.h = 1e-2;
    c.horizon = 10;
    c.init_policy = "letter-noisy";
    c.init_letter = "H";
    c.noise_sigma = 1.0;
    c.settle_kind = "fe";
    c.settle_h = 1e-2;
    c.desired_policy = "letter";
    c.desired_letter = "T";
    c.budget_mode = "exactly";
    c.budget_count = 10;
    c.baseline_count = 1000;
    // All standard fractions of this network, including 80% where
    // C(25,20) = 53130, compare against sampled selections.
    c.exhaustive_cap = 50000;
    c.sim_steps = 3000;
    return c;
  }
  throw ConfigError(0, "unknown profile '" + name + "'");
}

ExperimentConfig parse_config(const std::string& text,
                              const std::string& source) {
  RawMap raw = tokenize(text, source);
  Reader reader(raw, source);

  ExperimentConfig config;
  std::string profile;
  reader.take_string("profile", profile);
  if (!profile.empty()) {
    try {
      config = profile_defaults(profile);
    } catch (const ConfigError&) {
      fail(source, reader.line_of("profile"),
           "unknown profile '" + profile + "'");
    }
  }

  reader.take_seed("seed", config.seed);
  reader.take_string("run.subcommand", config.subcommand);
  reader.take_string("model.kind", config.model_kind);
  reader.take_int("model.n", config.model_n);
  reader.take_double("model.epsilon", config.epsilon);
  reader.take_string("scheme.kind", config.scheme_kind);
  reader.take_double("scheme.h", config.h);
  reader.take_double("scheme.newton_tol", config.newton_tol);
  reader.take_int("scheme.newton_max_iter", config.newton_max_iter);
  reader.take_int("horizon.steps", config.horizon);
  reader.take_string("init.policy", config.init_policy);
  reader.take_string("init.letter", config.init_letter);
  reader.take_double("init.noise_sigma", config.noise_sigma);
  reader.take_values("init.values", config.init_values);
  reader.take_string("settle.kind", config.settle_kind);
  reader.take_double("settle.h", config.settle_h);
  reader.take_double("settle.tol", config.settle_tol);
  reader.take_long("settle.max_steps", config.settle_max_steps);
  reader.take_string("desired.policy", config.desired_policy);
  reader.take_string("desired.letter", config.desired_letter);
  reader.take_double("desired.low", config.desired_low);
  reader.take_double("desired.high", config.desired_high);
  reader.take_values("desired.values", config.desired_values);
  reader.take_string("budget.mode", config.budget_mode);
  reader.take_int("budget.count", config.budget_count);
  reader.take_double("solver.tol_grad", config.tol_grad);
  reader.take_int("solver.max_iter", config.max_iter);
  reader.take_int("mino.inner_iters", config.inner_iters);
  reader.take_int("mino.max_poll_rounds", config.max_poll_rounds);
  reader.take_double("mino.improve_rtol", config.improve_rtol);
  reader.take_double("relax.tol", config.relax_tol);
  reader.take_int("relax.max_iter", config.relax_max_iter);
  reader.take_int("baseline.count", config.baseline_count);
  reader.take_llong("baseline.cap", config.exhaustive_cap);
  reader.take_string("sim.kind", config.sim_kind);
  reader.take_double("sim.h", config.sim_h);
  reader.take_int("sim.steps", config.sim_steps);
  reader.take_int("histogram.bins", config.histogram_bins);
  reader.reject_unused();

  resolve_scheme_defaults(config);

  validate(config, reader, source);
  return config;
}

void resolve_scheme_defaults(ExperimentConfig& config) {
  if (config.settle_kind.empty()) config.settle_kind = config.scheme_kind;
  if (config.sim_kind.empty()) config.sim_kind = config.settle_kind;
  if (config.sim_h <= 0.0) config.sim_h = config.settle_h;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::string serialize_config(const ExperimentConfig& config) {
  ExperimentConfig c = config;  // emit the resolved form
  resolve_scheme_defaults(c);
  std::ostringstream out;
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  auto line = [&out](const std::string& key, const std::string& value) {
    out << key << " = " << value << "\n";
  };

  if (c.seed.has_value()) line("seed", std::to_string(*c.seed));
  if (!c.subcommand.empty()) line("run.subcommand", c.subcommand);
  line("model.kind", c.model_kind);
  line("model.n", std::to_string(c.model_n));
  if (c.model_kind == "memory") line("model.epsilon", num(c.epsilon));
  line("scheme.kind", c.scheme_kind);
  line("scheme.h", num(c.h));
  line("scheme.newton_tol", num(c.newton_tol));
  line("scheme.newton_max_iter", std::to_string(c.newton_max_iter));
  line("horizon.steps", std::to_string(c.horizon));
  line("init.policy", c.init_policy);
  if (c.init_policy == "letter-noisy") {
    line("init.letter", c.init_letter);
    line("init.noise_sigma", num(c.noise_sigma));
  }
  if (!c.init_values.empty()) {
    std::string values;
    for (double v : c.init_values) {
      if (!values.empty()) values += " ";
      values += num(v);
    }
    line("init.values", values);
  }
  line("settle.kind", c.settle_kind);
  line("settle.h", num(c.settle_h));
  line("settle.tol", num(c.settle_tol));
  line("settle.max_steps", std::to_string(c.settle_max_steps));
  line("desired.policy", c.desired_policy);
  if (c.desired_policy == "letter") line("desired.letter", c.desired_letter);
  if (c.desired_policy == "uniform") {
    line("desired.low", num(c.desired_low));
    line("desired.high", num(c.desired_high));
  }
  if (!c.desired_values.empty()) {
    std::string values;
    for (double v : c.desired_values) {
      if (!values.empty()) values += " ";
      values += num(v);
    }
    line("desired.values", values);
  }
  line("budget.mode", c.budget_mode);
  line("budget.count", std::to_string(c.budget_count));
  line("solver.tol_grad", num(c.tol_grad));
  line("solver.max_iter", std::to_string(c.max_iter));
  line("mino.inner_iters", std::to_string(c.inner_iters));
  line("mino.max_poll_rounds", std::to_string(c.max_poll_rounds));
  line("mino.improve_rtol", num(c.improve_rtol));
  line("relax.tol", num(c.relax_tol));
  line("relax.max_iter", std::to_string(c.relax_max_iter));
  line("baseline.count", std::to_string(c.baseline_count));
  line("baseline.cap", std::to_string(c.exhaustive_cap));
  line("sim.kind", c.sim_kind);
  line("sim.h", num(c.sim_h));
  line("sim.steps", std::to_string(c.sim_steps));
  line("histogram.bins", std::to_string(c.histogram_bins));
  return out.str();
}

}  // namespace netctl
