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

#include "pmhll/cli/scan.h"

#include <algorithm>
#include <iterator>

#include <fmt/format.h>

#include "pmhll/analysis/tracking.h"

namespace pmhll::cli {

std::size_t ScanResult::persistent_count() const {
  return static_cast<std::size_t>(std::count_if(
      instances.begin(), instances.end(),
      [](const ScanInstance& i) { return i.persistent; }));
}

ScanResult run_scan(std::span<const double> signal, const BankConfig& config,
                    const ScanOptions& options) {
  Bank bank(config);
  ScanResult result;
  result.traces = bank.run(signal, options.workers);
  ReportOptions report_options;
  report_options.exclude_fraction = options.exclude_fraction;
  for (std::size_t k = 0; k < bank.size(); ++k) {
    const Trace& trace = result.traces[k];
    const TrackingReport report = make_report(trace, config.instance.fs, report_options);
    const EngineConfig& c = bank.instance(k).config();
    result.instances.push_back(
        {c.fc0, c.fc_min, c.upper_frequency(), report.lock_fraction,
         report.mean_hnr_db, trace.size() ? trace.fc_hz.back() : c.fc0,
         report.lock_fraction >= options.persistent_fraction});
  }
  return result;
}

std::string scan_summary_csv(const ScanResult& result) {
  std::string out =
      "instance,fc0_hz,fc_min_hz,fc_max_hz,lock_fraction,mean_hnr_db,final_fc_hz,"
      "persistent\n";
  for (std::size_t k = 0; k < result.instances.size(); ++k) {
    const ScanInstance& i = result.instances[k];
    fmt::format_to(std::back_inserter(out), "{},{:.9g},{:.9g},{:.9g},{:.9g},{:.9g},{:.9g},{}\n",
                   k, i.fc0_hz, i.fc_min_hz, i.fc_max_hz, i.lock_fraction,
                   i.mean_hnr_db, i.final_fc_hz, i.persistent ? 1 : 0);
  }
  return out;
}

}  // namespace pmhll::cli
