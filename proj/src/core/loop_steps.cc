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

#include "pmhll/core/loop_steps.h"

#include <algorithm>
#include <cmath>

#include "pmhll/errors.h"

namespace pmhll {

double hnr_step(HnrState& state, double constructive, double suppressive,
                double tau_s, double tau_post_s, double fs) {
  const double p = state.harmonic_power.step(constructive * constructive,
                                             tau_s, fs);
  const double m = state.noise_power.step(suppressive * suppressive, tau_s, fs);
  double db = 10.0 * std::log10(p / (m + kHnrFloor));
  // log10(0) is -inf; clamp before it reaches the smoother.
  db = std::clamp(db, -kHnrClampDb, kHnrClampDb);
  return state.smoothed_db.step(db, tau_post_s, fs);
}

double control_step(ControlState& state, double constructive,
                    double suppressive, double tau_s, double fs) {
  const std::complex<double> c(constructive, suppressive);
  double adc = 0.0;
  if (std::abs(c) >= kPhaseMagnitudeFloor &&
      std::abs(state.previous) >= kPhaseMagnitudeFloor) {
    adc = std::arg(c * std::conj(state.previous));
  }
  state.previous = c;
  return state.signal.step(adc, tau_s, fs);
}

double adaptation_factor(double fc, double fs, double adapt_periods) {
  return std::exp2(fc / (12.0 * adapt_periods * fs));
}

double adapt_step(double fc, double cs, const EngineConfig& config) {
  const double g = adaptation_factor(fc, config.fs, config.adapt_periods);
  if (cs > 0.0) {
    fc /= g;
  } else if (cs < 0.0) {
    fc *= g;
  }
  return std::clamp(fc, config.fc_min, config.upper_frequency());
}

CatchRange catch_range(double fc, int np) {
  if (!(fc > 0.0) || np < 1) throw ConfigError("catch range needs fc > 0, np >= 1");
  const double half_width = 1.0 / (2.0 * np);
  return {fc * (1.0 - half_width), fc * (1.0 + half_width)};
}

}  // namespace pmhll
