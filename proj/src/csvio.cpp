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

#include "netctl/csvio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "netctl/errors.hpp"

namespace netctl {
namespace {

void commit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_g4(double v) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  commit(path, content);
}

void write_result_csv(const std::string& path,
                      const std::vector<MethodResult>& results) {
  std::ostringstream out;
  out << "method,pi,J,e\n";
  for (const auto& r : results) {
    out << r.method << ',' << r.selection.bitstring() << ','
        << fmt_g17(r.objective) << ',' << fmt_g17(r.error) << '\n';
  }
  commit(path, out.str());
}

void write_baseline_csv(const std::string& path,
                        const BaselineDistribution& dist) {
  std::ostringstream out;
  out << "index,pi,J,e\n";
  for (const auto& entry : dist.entries) {
    out << entry.index << ',' << entry.selection.bitstring() << ','
        << fmt_g17(entry.objective) << ',' << fmt_g17(entry.error) << '\n';
  }
  commit(path, out.str());
}

void write_error_steps_csv(const std::string& path,
                           const std::vector<ErrorSeries>& series) {
  std::ostringstream out;
  out << "method,k,e_k\n";
  for (const auto& s : series) {
    for (size_t k = 0; k < s.errors.size(); ++k) {
      out << s.method << ',' << k << ',' << fmt_g17(s.errors[k]) << '\n';
    }
  }
  commit(path, out.str());
}

void write_trace_csv(const std::string& path,
                     const std::vector<PollRecord>& trace) {
  std::ostringstream out;
  out << "poll_round,candidate_pi_bitstring,inner_J,accepted\n";
  for (const auto& rec : trace) {
    out << rec.round << ',' << rec.pi << ',' << fmt_g17(rec.inner_j) << ','
        << (rec.accepted ? 1 : 0) << '\n';
  }
  commit(path, out.str());
}

void write_gradcheck_csv(const std::string& path,
                         const GradientReport& report) {
  std::ostringstream out;
  out << "index,analytic,fd,rel_err\n";
  const auto* analytic = report.gradient.data();
  const auto* fd = report.fd_gradient.data();
  const Eigen::Index count = report.gradient.size();
  for (Eigen::Index i = 0; i < count; ++i) {
    const double denom = std::max(1.0, std::abs(fd[i]));
    out << i << ',' << fmt_g17(analytic[i]) << ',' << fmt_g17(fd[i]) << ','
        << fmt_g17(std::abs(analytic[i] - fd[i]) / denom) << '\n';
  }
  commit(path, out.str());
}

void write_trajectory_csv(const std::string& path,
                          const std::vector<Vec>& states, double h) {
  std::ostringstream out;
  out << 't';
  if (!states.empty()) {
    for (Eigen::Index i = 1; i <= states.front().size(); ++i) {
      out << ",x_" << i;
    }
  }
  out << '\n';
  for (size_t k = 0; k < states.size(); ++k) {
    out << fmt_g17(static_cast<double>(k) * h);
    const Vec& x = states[k];
    for (Eigen::Index i = 0; i < x.size(); ++i) out << ',' << fmt_g17(x[i]);
    out << '\n';
  }
  commit(path, out.str());
}

void write_model_file(const std::string& path, const Experiment& ex) {
  std::ostringstream out;
  out << "kind " << ex.config.model_kind << '\n';
  out << "nodes " << ex.model.nodes << '\n';
  out << "node_dim " << ex.model.node_dim << '\n';
  if (ex.config.model_kind == "duffing") {
    const DuffingParams& p = ex.duffing;
    out << "# node <i> <x> <y> <alpha> <beta> <gamma>\n";
    for (int i = 0; i < p.graph.n; ++i) {
      out << "node " << i << ' ' << fmt_g17(p.graph.coords[i][0]) << ' '
          << fmt_g17(p.graph.coords[i][1]) << ' ' << fmt_g17(p.alpha_self[i])
          << ' ' << fmt_g17(p.beta_self[i]) << ' ' << fmt_g17(p.gamma_self[i])
          << '\n';
    }
    out << "# edge <i> <j> <alpha> <beta> <gamma>\n";
    for (size_t e = 0; e < p.graph.edges.size(); ++e) {
      const auto idx = static_cast<Eigen::Index>(e);
      out << "edge " << p.graph.edges[e].first << ' '
          << p.graph.edges[e].second << ' ' << fmt_g17(p.alpha_edge[idx])
          << ' ' << fmt_g17(p.beta_edge[idx]) << ' '
          << fmt_g17(p.gamma_edge[idx]) << '\n';
    }
  } else {
    out << "epsilon " << fmt_g17(ex.memory.epsilon) << '\n';
    out << "# pattern <index> <bitstring, 1 = +1, 0 = -1, row-major>\n";
    for (size_t m = 0; m < ex.memory.patterns.size(); ++m) {
      out << "pattern " << m << ' ';
      const auto& xi = ex.memory.patterns[m];
      for (Eigen::Index i = 0; i < xi.size(); ++i) {
        out << (xi[i] > 0 ? '1' : '0');
      }
      out << '\n';
    }
  }
  commit(path, out.str());
}

}  // namespace netctl
