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

#include "pmhll/cli/svg_plot.h"

#include <algorithm>
#include <cmath>
#include <iterator>

#include <fmt/format.h>

namespace pmhll::cli {

namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 380.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 60.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 70.0;

constexpr const char* kFcColors[] = {"#c0392b", "#8e44ad", "#d35400", "#16a085"};
constexpr const char* kHnrColors[] = {"#2471a3", "#5dade2", "#1abc9c", "#7fb3d5"};

struct Range {
  double lo = 0.0;
  double hi = 1.0;
  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (hi - lo < 1e-9) hi = lo + 1.0;
    const double m = 0.05 * (hi - lo);
    lo -= m;
    hi += m;
  }
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

void polyline(std::string& out, const std::vector<double>& v, double x_scale,
              const Range& r, double plot_h, const char* color, double width) {
  if (v.empty()) return;
  out += fmt::format(R"(<polyline fill="none" stroke="{}" stroke-width="{}" points=")",
                     color, width);
  for (std::size_t n = 0; n < v.size(); ++n) {
    const double x = kLeft + static_cast<double>(n) * x_scale;
    const double y = kTop + plot_h * (1.0 - (v[n] - r.lo) / (r.hi - r.lo));
    fmt::format_to(std::back_inserter(out), "{:.1f},{:.1f} ", x, y);
  }
  out += "\"/>\n";
}

}  // namespace

std::string render_svg(const Plot& plot) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  std::size_t n = 0;
  Range left{0.0, 0.0};
  Range right{0.0, 0.0};
  bool first = true;
  for (const PlotInstance& inst : plot.instances) {
    n = std::max(n, inst.hnr_db.size());
    for (double v : inst.hnr_db) left.include(v);
    for (const auto* series : {&inst.fc_rel_hz, &inst.f0_rel_hz}) {
      for (double v : *series) {
        if (first) {
          right = {v, v};
          first = false;
        }
        right.include(v);
      }
    }
  }
  left.pad();
  right.pad();
  const double x_scale = n > 1 ? plot_w / static_cast<double>(n - 1) : 0.0;
  const double duration = static_cast<double>(n) / plot.fs;

  std::string out = fmt::format(
      R"(<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" viewBox="0 0 {0} {1}">)"
      "\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      kWidth, kHeight);
  out += fmt::format(R"(<text x="{}" y="18" font-family="sans-serif" font-size="13">{}</text>)"
                     "\n", kLeft, escape(plot.title));
  out += fmt::format(R"(<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>)"
                     "\n", kLeft, kTop, plot_w, plot_h);

  // Axis labels with the range endpoints.
  out += fmt::format(
      R"(<text x="4" y="{:.1f}" font-family="sans-serif" font-size="11" fill="#2471a3">{:.1f}</text>)"
      "\n", kTop + 10, left.hi);
  out += fmt::format(
      R"(<text x="4" y="{:.1f}" font-family="sans-serif" font-size="11" fill="#2471a3">{:.1f}</text>)"
      "\n", kTop + plot_h, left.lo);
  out += fmt::format(
      R"(<text x="4" y="{:.1f}" font-family="sans-serif" font-size="11" fill="#2471a3">HNR/dB</text>)"
      "\n", kTop + plot_h / 2);
  out += fmt::format(
      R"(<text x="{:.1f}" y="{:.1f}" font-family="sans-serif" font-size="11" fill="#c0392b">{:.2f}</text>)"
      "\n", kWidth - kRight + 4, kTop + 10, right.hi);
  out += fmt::format(
      R"(<text x="{:.1f}" y="{:.1f}" font-family="sans-serif" font-size="11" fill="#c0392b">{:.2f}</text>)"
      "\n", kWidth - kRight + 4, kTop + plot_h, right.lo);
  out += fmt::format(
      R"(<text x="{:.1f}" y="{:.1f}" font-family="sans-serif" font-size="11" fill="#c0392b">{}</text>)"
      "\n", kWidth - kRight - 80, kHeight - 8, escape(plot.right_label));
  out += fmt::format(
      R"(<text x="{:.1f}" y="{:.1f}" font-family="sans-serif" font-size="11">t = 0 .. {:.3f} s</text>)"
      "\n", kLeft, kHeight - 8, duration);

  if (left.lo < 0.0 && left.hi > 0.0) {
    const double y0 = kTop + plot_h * (1.0 - (0.0 - left.lo) / (left.hi - left.lo));
    out += fmt::format(
        R"(<line x1="{}" y1="{:.1f}" x2="{}" y2="{:.1f}" stroke="#2471a3" stroke-dasharray="4 3" stroke-width="0.6"/>)"
        "\n", kLeft, y0, kLeft + plot_w, y0);
  }

  for (std::size_t k = 0; k < plot.instances.size(); ++k) {
    const PlotInstance& inst = plot.instances[k];
    polyline(out, inst.hnr_db, x_scale, left, plot_h, kHnrColors[k % 4], 1.0);
    polyline(out, inst.f0_rel_hz, x_scale, right, plot_h, "black", 1.2);
    polyline(out, inst.fc_rel_hz, x_scale, right, plot_h, kFcColors[k % 4], 1.2);

    // Strobe ticks, shorter for later instances.
    const double base = kTop + plot_h + 8.0;
    const double len = 16.0 / static_cast<double>(k + 1);
    for (std::size_t i = 0; i < inst.strobe.size(); ++i) {
      if (!inst.strobe[i]) continue;
      const double x = kLeft + static_cast<double>(i) * x_scale;
      fmt::format_to(std::back_inserter(out),
                     R"(<line x1="{0:.1f}" y1="{1:.1f}" x2="{0:.1f}" y2="{2:.1f}" stroke="{3}" stroke-width="1"/>)"
                     "\n", x, base + 4.0 * static_cast<double>(k), base + 4.0 * static_cast<double>(k) + len,
                     kFcColors[k % 4]);
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pmhll::cli
