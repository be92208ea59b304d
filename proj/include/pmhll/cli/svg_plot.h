// Copyright 2026 The pmhll Authors.
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

#ifndef PMHLL_CLI_SVG_PLOT_H_
#define PMHLL_CLI_SVG_PLOT_H_

#include <string>
#include <vector>

namespace pmhll::cli {

// Diagnostic figure: HNR on the left axis, frequency relative to a reference
// on the right axis, strobe ticks along the bottom. One entry per instance.
struct PlotInstance {
  std::vector<double> hnr_db;
  std::vector<double> fc_rel_hz;
  std::vector<double> f0_rel_hz;  // may be empty
  std::vector<bool> strobe;
};

struct Plot {
  std::string title;
  double fs = 5000.0;
  std::string right_label = "fc - ref / Hz";
  std::vector<PlotInstance> instances;
};

std::string render_svg(const Plot& plot);

}  // namespace pmhll::cli

#endif  // PMHLL_CLI_SVG_PLOT_H_
