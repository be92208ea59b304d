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

#ifndef PMHLL_CORE_ENGINE_CONFIG_H_
#define PMHLL_CORE_ENGINE_CONFIG_H_

#include <optional>

namespace pmhll {

// Tunable constants of one loop instance. All time constants are multiples
// of the current oscillator period Tc = 1 / fc.
struct EngineConfig {
  double fs = 5000.0;      // sampling frequency, Hz
  double fc0 = 100.0;      // initial oscillator frequency, Hz
  double fc_min = 96.0;    // lower clamp for fc, Hz
  std::optional<double> fc_max;  // upper clamp, Hz; fs / 4 when unset
  int np = 7;              // assumed highest harmonic number

  double tau_si_mult = 1.0;         // stabilized image
  double tau_hnr_mult = 0.5;        // comb power averaging
  double tau_hnr_post_mult = 0.05;  // HNR post-smoothing (dB domain)
  double tau_cs_mult = 0.1;         // phase-difference averaging

  // A one-semitone offset is closed within this many oscillator periods.
  double adapt_periods = 3.0;

  // Keep fc at fc0. Used for open-loop measurements.
  bool hold_frequency = false;

  double upper_frequency() const { return fc_max.value_or(fs / 4.0); }

  // Throws ConfigError on any violated invariant.
  void validate() const;
};

}  // namespace pmhll

#endif  // PMHLL_CORE_ENGINE_CONFIG_H_
