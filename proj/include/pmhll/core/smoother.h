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

#ifndef PMHLL_CORE_SMOOTHER_H_
#define PMHLL_CORE_SMOOTHER_H_

#include <cmath>

namespace pmhll {

// Pole of a first-order lowpass with time constant tau_s, updated at
// rate_hz: a = exp(-1 / (tau_s * rate_hz)).
inline double smoothing_coefficient(double tau_s, double rate_hz) {
  return std::exp(-1.0 / (tau_s * rate_hz));
}

// First-order IIR lowpass whose time constant may change on every call.
class OnePole {
 public:
  OnePole() = default;
  explicit OnePole(double initial) : state_(initial) {}

  double step(double x, double tau_s, double rate_hz) {
    const double a = smoothing_coefficient(tau_s, rate_hz);
    state_ = a * state_ + (1.0 - a) * x;
    return state_;
  }

  double value() const { return state_; }
  void reset(double value = 0.0) { state_ = value; }

 private:
  double state_ = 0.0;
};

}  // namespace pmhll

#endif  // PMHLL_CORE_SMOOTHER_H_
