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

#ifndef PMHLL_CLI_SIMULATION_H_
#define PMHLL_CLI_SIMULATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pmhll/analysis/tracking.h"
#include "pmhll/cli/presets.h"
#include "pmhll/core/engine_config.h"
#include "pmhll/core/trace.h"

namespace pmhll::cli {

struct SimulationRequest {
  std::string preset = "I";
  int variant = 0;
  std::uint64_t seed = 1;
  double exclude_fraction = 0.1;
  // fs, fc_min and time constants; fc0 comes from the preset.
  EngineConfig engine;
};

struct InstanceResult {
  EngineConfig config;
  std::vector<double> f0;  // ground truth per sample
  Trace trace;
  TrackingReport report;
};

struct SnrReport {
  // Whole-signal SNR of the periodic part against the added noise; empty
  // when no noise was added.
  std::optional<double> whole_signal_db;
  // Chord presets only, one entry per tone.
  std::vector<double> tone_vs_noise_db;
  std::vector<double> tone_vs_noise_and_others_db;
};

struct SimulationResult {
  SimulationRequest request;
  const Preset* preset = nullptr;
  const PresetVariant* variant = nullptr;
  std::vector<double> clean;   // periodic part (the IRN itself for V)
  std::vector<double> signal;  // what the loops consumed
  SnrReport snr;
  std::vector<InstanceResult> instances;
};

// Synthesizes the preset signal, runs the loop (or the loop bank for chords)
// and scores every instance. Throws ConfigError for an unknown preset or
// out-of-range variant.
SimulationResult run_simulation(const SimulationRequest& request);

// Just the signal part of run_simulation.
struct SynthesizedSignal {
  std::vector<double> clean;
  std::vector<double> signal;
  std::vector<std::vector<double>> f0;  // per instance
  SnrReport snr;
};
SynthesizedSignal synthesize_preset(const Preset& preset, int variant,
                                    std::uint64_t seed, double fs);

const char* tool_version();

}  // namespace pmhll::cli

#endif  // PMHLL_CLI_SIMULATION_H_
