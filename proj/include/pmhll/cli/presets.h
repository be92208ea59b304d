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

#ifndef PMHLL_CLI_PRESETS_H_
#define PMHLL_CLI_PRESETS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmhll/signals/f0_track.h"
#include "pmhll/signals/synth.h"

namespace pmhll::cli {

enum class SignalFamily { kHarmonic, kIrn, kChord };

struct ReferenceError {
  double mean;
  double std;
};

struct PresetVariant {
  std::string label;
  double noise_gain = 0.0;
  double mistune_hz = 0.0;
  int irn_iterations = 0;
  std::optional<double> reference_snr_db;
  // One entry per tracked instance.
  std::vector<ReferenceError> reference_error;
};

// One row of the evaluation table: signal family, ground truth, loop seeds.
struct Preset {
  std::string id;
  std::string description;
  SignalFamily family = SignalFamily::kHarmonic;
  double duration_s = 0.4;
  // Harmonic presets: f0 trajectory and partials.
  F0Track track = F0Track::constant(100.0);
  HarmonicSpec harmonics;
  // IRN presets: nominal repetition frequency.
  double irn_f0_hz = 0.0;
  // Chord presets.
  double chord_base_hz = 0.0;
  std::vector<int> chord_offsets;
  std::vector<double> fc0;  // one per instance
  std::vector<PresetVariant> variants;
};

const std::vector<Preset>& presets();

// Throws ConfigError for unknown ids.
const Preset& find_preset(std::string_view id);

}  // namespace pmhll::cli

#endif  // PMHLL_CLI_PRESETS_H_
