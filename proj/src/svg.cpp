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

#include "netctl/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "netctl/csvio.hpp"
#include "netctl/errors.hpp"

namespace netctl {
namespace {

// Canvas geometry (pixels).
constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 56.0;
constexpr double kRight = 616.0;
constexpr double kTop = 24.0;
constexpr double kBottom = 352.0;

std::string marker_color(const std::string& role) {
  if (role == "red") return "#cc2222";
  if (role == "black") return "#111111";
  return "#777777";
}

// Fixed two-decimal pixel coordinates keep the output readable and exactly
// reproducible.
std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void text(std::ostringstream& out, double x, double y, const std::string& s,
          const std::string& anchor = "start",
          const std::string& fill = "#333333") {
  out << "  <text x=\"" << px(x) << "\" y=\"" << px(y)
      << "\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"12\""
      << " text-anchor=\"" << anchor << "\" fill=\"" << fill << "\">" << s
      << "</text>\n";
}

void vline(std::ostringstream& out, double x, double y1, double y2,
           const std::string& stroke, double width) {
  out << "  <line x1=\"" << px(x) << "\" y1=\"" << px(y1) << "\" x2=\""
      << px(x) << "\" y2=\"" << px(y2) << "\" stroke=\"" << stroke
      << "\" stroke-width=\"" << px(width) << "\"/>\n";
}

}  // namespace

std::string render_histogram(const std::vector<double>& values,
                             const HistogramSpec& spec) {
  if (values.empty()) throw Error("histogram needs at least one value");
  if (spec.bins < 1) throw Error("histogram needs at least one bin");
  for (const auto& m : spec.markers) {
    if (!std::isfinite(m.value)) {
      throw Error("histogram marker '" + m.label + "' is not finite");
    }
  }

  double lo = values.front();
  double hi = values.front();
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(hi > lo)) {  // degenerate span: center the single occupied bin
    lo -= 0.5;
    hi += 0.5;
  }

  const int bins = spec.bins;
  std::vector<long> counts(static_cast<size_t>(bins), 0);
  for (double v : values) {
    int b = static_cast<int>(static_cast<double>(bins) * (v - lo) / (hi - lo));
    b = std::clamp(b, 0, bins - 1);
    ++counts[static_cast<size_t>(b)];
  }
  const long peak = *std::max_element(counts.begin(), counts.end());

  const auto xpix = [lo, hi](double v) {
    const double t = (v - lo) / (hi - lo);
    return kLeft + std::clamp(t, 0.0, 1.0) * (kRight - kLeft);
  };
  const auto ypix = [peak](long c) {
    return kBottom -
           (kBottom - kTop) * static_cast<double>(c) / static_cast<double>(peak);
  };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" fill=\"#ffffff\"/>\n";

  // Bars.
  const double bin_w = (kRight - kLeft) / static_cast<double>(bins);
  for (int b = 0; b < bins; ++b) {
    const long c = counts[static_cast<size_t>(b)];
    if (c == 0) continue;
    const double x = kLeft + bin_w * static_cast<double>(b);
    const double y = ypix(c);
    out << "  <rect x=\"" << px(x) << "\" y=\"" << px(y) << "\" width=\""
        << px(bin_w) << "\" height=\"" << px(kBottom - y)
        << "\" fill=\"#9db8d2\" stroke=\"#5c7899\" stroke-width=\"0.5\"/>\n";
  }

  // Axes.
  out << "  <line x1=\"" << px(kLeft) << "\" y1=\"" << px(kBottom)
      << "\" x2=\"" << px(kRight) << "\" y2=\"" << px(kBottom)
      << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n"
      << "  <line x1=\"" << px(kLeft) << "\" y1=\"" << px(kTop) << "\" x2=\""
      << px(kLeft) << "\" y2=\"" << px(kBottom)
      << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  // Ticks: x at lo / mid / hi, y at 0 and the peak count.
  const double mid = 0.5 * (lo + hi);
  for (double v : {lo, mid, hi}) {
    const double x = xpix(v);
    vline(out, x, kBottom, kBottom + 5.0, "#333333", 1.0);
    text(out, x, kBottom + 20.0, fmt_g4(v), "middle");
  }
  text(out, kLeft - 8.0, kBottom + 4.0, "0", "end");
  text(out, kLeft - 8.0, kTop + 4.0, std::to_string(peak), "end");
  text(out, 0.5 * (kLeft + kRight), kHeight - 10.0, spec.x_label, "middle");

  // Marker lines with labels stacked from the top.
  double label_y = kTop + 14.0;
  for (const auto& m : spec.markers) {
    const std::string color = marker_color(m.color);
    const double x = xpix(m.value);
    vline(out, x, kTop, kBottom, color, 1.5);
    const bool flip = x > 0.75 * (kRight - kLeft) + kLeft;
    text(out, flip ? x - 6.0 : x + 6.0, label_y,
         m.label + " = " + fmt_g4(m.value), flip ? "end" : "start", color);
    label_y += 16.0;
  }

  out << "</svg>\n";
  return out.str();
}

void emit_histogram(const std::vector<double>& values,
                    const HistogramSpec& spec, const std::string& path) {
  write_text_file(path, render_histogram(values, spec));
}

}  // namespace netctl
