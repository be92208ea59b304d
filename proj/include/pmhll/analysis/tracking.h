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

#ifndef PMHLL_ANALYSIS_TRACKING_H_
#define PMHLL_ANALYSIS_TRACKING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pmhll/core/trace.h"

namespace pmhll {

struct ErrorStats {
  double mean = 0.0;  // Hz
  double std = 0.0;   // Hz, population (divide by N)
  std::size_t count = 0;
};

// First sample index included once the leading exclude_fraction of a trace
// of length n is dropped.
std::size_t evaluation_start(std::size_t n, double exclude_fraction);

// Mean and standard deviation of fc - f0 over the evaluation window.
// Throws ConfigError on mismatched lengths or an empty window.
ErrorStats tracking_error(std::span<const double> fc,
                          std::span<const double> f0,
                          double exclude_fraction = 0.1);

// First time t* with |fc - f0| <= tol for hold_s seconds starting at t*.
std::optional<double> convergence_time(std::span<const double> fc,
                                       std::span<const double> f0, double fs,
                                       double tol_hz, double hold_s);

struct Interval {
  double start_s;
  double end_s;  // exclusive: one sample past the last locked sample
};

// Maximal runs with hnr_db > 0.
std::vector<Interval> lock_intervals(std::span<const double> hnr_db, double fs);

// Shift (seconds, >= 0) minimizing the mean squared difference between
// fc(t) and f0(t - lag), searched in whole samples up to max_lag_s.
double tracking_lag(std::span<const double> fc, std::span<const double> f0,
                    double fs, double max_lag_s, double exclude_fraction = 0.1);

struct ReportOptions {
  double exclude_fraction = 0.1;
  double convergence_tol_hz = 1.0;
  double convergence_hold_s = 0.02;
};

struct TrackingReport {
  std::optional<ErrorStats> error;  // empty without ground truth
  double exclude_fraction = 0.1;
  std::optional<double> convergence_time_s;
  std::vector<Interval> lock_intervals;
  // Mean hnr_db over locked samples in the evaluation window; 0 if none.
  double mean_hnr_db = 0.0;
  // Fraction of evaluation-window samples with locked set.
  double lock_fraction = 0.0;
};

TrackingReport make_report(const Trace& trace, std::span<const double> f0,
                           double fs, const ReportOptions& options = {});

// Report without ground truth (error and convergence omitted).
TrackingReport make_report(const Trace& trace, double fs,
                           const ReportOptions& options = {});

}  // namespace pmhll

#endif  // PMHLL_ANALYSIS_TRACKING_H_
