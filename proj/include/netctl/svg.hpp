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

#ifndef NETCTL_SVG_HPP_
#define NETCTL_SVG_HPP_

#include <string>
#include <vector>

namespace netctl {

// Vertical line overlaid on the histogram, marking one method's error.
// `color` is a role, "red" or "black"; anything else renders gray.
struct HistogramMarker {
  std::string label;
  double value = 0.0;
  std::string color;
};

struct HistogramSpec {
  int bins = 30;
  std::string x_label = "final control error e";
  std::vector<HistogramMarker> markers;
};

// Renders a self-contained static SVG: the histogram of `values` over
// `spec.bins` equal bins spanning [min, max], plus one labeled vertical
// line per marker.  Numbers are printed with 4 significant digits.  Output
// is a pure function of the inputs.  Throws Error on an empty distribution
// or a non-finite marker, IoError on write failure.
void emit_histogram(const std::vector<double>& values,
                    const HistogramSpec& spec, const std::string& path);

// The SVG document alone, for tests.
std::string render_histogram(const std::vector<double>& values,
                             const HistogramSpec& spec);

}  // namespace netctl

#endif  // NETCTL_SVG_HPP_
