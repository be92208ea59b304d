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

#include "pmhll/analysis/tracking.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pmhll/errors.h"

namespace pmhll {

std::size_t evaluation_start(std::size_t n, double exclude_fraction) {
  if (!(exclude_fraction >= 0.0 && exclude_fraction < 1.0)) {
    throw ConfigError("exclude_fraction must lie in [0, 1)");
  }
  return static_cast<std::size_t>(std::ceil(exclude_fraction * static_cast<double>(n)));
}

ErrorStats tracking_error(std::span<const double> fc,
                          std::span<const double> f0,
                          double exclude_fraction) {
  if (fc.size() != f0.size()) throw ConfigError("trace length mismatch");
  const std::size_t start = evaluation_start(fc.size(), exclude_fraction);
  if (start >= fc.size()) throw ConfigError("empty evaluation window");

  ErrorStats stats;
  stats.count = fc.size() - start;
  double sum = 0.0;
  for (std::size_t n = start; n < fc.size(); ++n) sum += fc[n] - f0[n];
  stats.mean = sum / static_cast<double>(stats.count);
  double sq = 0.0;
  for (std::size_t n = start; n < fc.size(); ++n) {
    const double d = fc[n] - f0[n] - stats.mean;
    sq += d * d;
  }
  stats.std = std::sqrt(sq / static_cast<double>(stats.count));
  return stats;
}

std::optional<double> convergence_time(std::span<const double> fc,
                                       std::span<const double> f0, double fs,
                                       double tol_hz, double hold_s) {
  if (fc.size() != f0.size()) throw ConfigError("trace length mismatch");
  if (!(tol_hz > 0.0) || !(hold_s >= 0.0)) {
    throw ConfigError("convergence needs tol > 0 and hold >= 0");
  }
  // Window of hold_s seconds spans this many samples including the start.
  const std::size_t window =
      static_cast<std::size_t>(std::ceil(hold_s * fs - 1e-9)) + 1;
  std::size_t run = 0;
  for (std::size_t n = 0; n < fc.size(); ++n) {
    run = std::abs(fc[n] - f0[n]) <= tol_hz ? run + 1 : 0;
    if (run >= window) {
      return static_cast<double>(n + 1 - window) / fs;
    }
  }
  return std::nullopt;
}

std::vector<Interval> lock_intervals(std::span<const double> hnr_db, double fs) {
  std::vector<Interval> out;
  std::size_t n = 0;
  while (n < hnr_db.size()) {
    if (!(hnr_db[n] > 0.0)) {
      ++n;
      continue;
    }
    const std::size_t start = n;
    while (n < hnr_db.size() && hnr_db[n] > 0.0) ++n;
    out.push_back({static_cast<double>(start) / fs, static_cast<double>(n) / fs});
  }
  return out;
}

double tracking_lag(std::span<const double> fc, std::span<const double> f0,
                    double fs, double max_lag_s, double exclude_fraction) {
  if (fc.size() != f0.size()) throw ConfigError("trace length mismatch");
  const std::size_t start = evaluation_start(fc.size(), exclude_fraction);
  const auto max_lag = static_cast<std::size_t>(std::floor(max_lag_s * fs));
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_lag = 0;
  for (std::size_t lag = 0; lag <= max_lag; ++lag) {
    const std::size_t from = std::max(start, lag);
    if (from >= fc.size()) break;
    double sq = 0.0;
    for (std::size_t n = from; n < fc.size(); ++n) {
      const double d = fc[n] - f0[n - lag];
      sq += d * d;
    }
    sq /= static_cast<double>(fc.size() - from);
    if (sq < best) {
      best = sq;
      best_lag = lag;
    }
  }
  return static_cast<double>(best_lag) / fs;
}

namespace {

void fill_lock_stats(const Trace& trace, double fs,
                     const ReportOptions& options, TrackingReport& report) {
  report.exclude_fraction = options.exclude_fraction;
  report.lock_intervals = lock_intervals(trace.hnr_db, fs);
  const std::size_t start =
      evaluation_start(trace.size(), options.exclude_fraction);
  double hnr_sum = 0.0;
  std::size_t locked = 0;
  for (std::size_t n = start; n < trace.size(); ++n) {
    if (trace.locked[n]) {
      hnr_sum += trace.hnr_db[n];
      ++locked;
    }
  }
  const std::size_t window = trace.size() > start ? trace.size() - start : 0;
  report.mean_hnr_db = locked ? hnr_sum / static_cast<double>(locked) : 0.0;
  report.lock_fraction =
      window ? static_cast<double>(locked) / static_cast<double>(window) : 0.0;
}

}  // namespace

TrackingReport make_report(const Trace& trace, std::span<const double> f0,
                           double fs, const ReportOptions& options) {
  TrackingReport report;
  fill_lock_stats(trace, fs, options, report);
  report.error = tracking_error(trace.fc_hz, f0, options.exclude_fraction);
  report.convergence_time_s =
      convergence_time(trace.fc_hz, f0, fs, options.convergence_tol_hz,
                       options.convergence_hold_s);
  return report;
}

TrackingReport make_report(const Trace& trace, double fs,
                           const ReportOptions& options) {
  TrackingReport report;
  fill_lock_stats(trace, fs, options, report);
  return report;
}

}  // namespace pmhll
