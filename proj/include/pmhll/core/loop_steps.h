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

#ifndef PMHLL_CORE_LOOP_STEPS_H_
#define PMHLL_CORE_LOOP_STEPS_H_

#include <complex>

#include "pmhll/core/engine_config.h"
#include "pmhll/core/smoother.h"

namespace pmhll {

inline constexpr double kHnrFloor = 1e-20;
inline constexpr double kHnrClampDb = 60.0;
inline constexpr double kPhaseMagnitudeFloor = 1e-12;

struct HnrState {
  OnePole harmonic_power;
  OnePole noise_power;
  OnePole smoothed_db;
};

// Ratio of the averaged constructive and suppressive image powers, in dB,
// clamped to +-60 dB and then smoothed in the dB domain.
double hnr_step(HnrState& state, double constructive, double suppressive,
                double tau_s, double tau_post_s, double fs);

struct ControlState {
  OnePole signal;
  std::complex<double> previous{0.0, 0.0};
};

// Smoothed per-sample rotation (radians) of constructive + i * suppressive.
// Positive when the input fundamental lies below fc.
double control_step(ControlState& state, double constructive,
                    double suppressive, double tau_s, double fs);

// Per-sample multiplicative step: g^(adapt_periods * fs / fc) = 2^(1/12).
double adaptation_factor(double fc, double fs, double adapt_periods);

// Divides fc by the adaptation factor for positive control, multiplies for
// negative, then clamps to [fc_min, upper_frequency()].
double adapt_step(double fc, double cs, const EngineConfig& config);

struct CatchRange {
  double low;
  double high;
};

// Interval around fc that an emerging component with up to np harmonics
// must fall into to capture the loop.
CatchRange catch_range(double fc, int np);

}  // namespace pmhll

#endif  // PMHLL_CORE_LOOP_STEPS_H_
