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

#ifndef PMHLL_CLI_SCAN_H_
#define PMHLL_CLI_SCAN_H_

#include <span>
#include <string>
#include <vector>

#include "pmhll/bank/bank.h"
#include "pmhll/core/trace.h"

namespace pmhll::cli {

struct ScanOptions {
  double exclude_fraction = 0.1;
  // An instance holds a persistent lock when it is locked for at least this
  // fraction of the evaluation window.
  double persistent_fraction = 0.9;
  unsigned workers = 1;
};

struct ScanInstance {
  double fc0_hz;
  double fc_min_hz;
  double fc_max_hz;
  double lock_fraction;
  double mean_hnr_db;  // over locked samples in the evaluation window
  double final_fc_hz;
  bool persistent;
};

struct ScanResult {
  std::vector<Trace> traces;
  std::vector<ScanInstance> instances;
  std::size_t persistent_count() const;
};

ScanResult run_scan(std::span<const double> signal, const BankConfig& config,
                    const ScanOptions& options = {});

// instance,fc0_hz,fc_min_hz,fc_max_hz,lock_fraction,mean_hnr_db,final_fc_hz,persistent
std::string scan_summary_csv(const ScanResult& result);

}  // namespace pmhll::cli

#endif  // PMHLL_CLI_SCAN_H_
