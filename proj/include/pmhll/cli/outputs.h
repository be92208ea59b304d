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

#ifndef PMHLL_CLI_OUTPUTS_H_
#define PMHLL_CLI_OUTPUTS_H_

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pmhll/analysis/tracking.h"
#include "pmhll/cli/simulation.h"
#include "pmhll/core/engine_config.h"
#include "pmhll/core/trace.h"

namespace pmhll::cli {

inline constexpr const char* kTraceCsvHeader = "t_s,fc_hz,hnr_db,cs,strobe,locked";

// One row per sample, floats with 9 significant digits, flags as 0/1.
std::string trace_csv(const Trace& trace, double fs);
void write_trace_csv(const std::filesystem::path& path, const Trace& trace,
                     double fs);

nlohmann::json to_json(const EngineConfig& config);
nlohmann::json to_json(const TrackingReport& report);

// Manifest: everything needed to regenerate the run bit-for-bit.
nlohmann::json manifest_json(const SimulationResult& result);

// Manifest, realized SNRs and per-instance reports.
nlohmann::json summary_json(const SimulationResult& result);

void write_text(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace pmhll::cli

#endif  // PMHLL_CLI_OUTPUTS_H_
