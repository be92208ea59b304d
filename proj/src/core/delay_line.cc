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

#include "pmhll/core/delay_line.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "pmhll/errors.h"

namespace pmhll {

DelayLine::DelayLine(std::size_t capacity) : buffer_(capacity, 0.0) {
  if (capacity < 2) throw ConfigError("delay line needs at least 2 samples");
}

std::size_t DelayLine::capacity_for(double fs, double fc_min) {
  if (!(fs > 0.0) || !(fc_min > 0.0)) {
    throw ConfigError("delay capacity needs positive fs and fc_min");
  }
  return static_cast<std::size_t>(std::ceil(fs / fc_min)) + 2;
}

void DelayLine::push(double x) {
  head_ = (head_ + 1) % buffer_.size();
  buffer_[head_] = x;
}

void DelayLine::clear() {
  std::fill(buffer_.begin(), buffer_.end(), 0.0);
  head_ = 0;
}

double DelayLine::at(std::size_t delay) const {
  const std::size_t n = buffer_.size();
  return buffer_[(head_ + n - delay % n) % n];
}

double DelayLine::read(double delay_samples) const {
  const double max_delay = static_cast<double>(buffer_.size() - 1);
  if (!(delay_samples >= 0.0) || delay_samples > max_delay) {
    throw ConfigError("fractional delay " + std::to_string(delay_samples) +
                      " outside delay line (max " + std::to_string(max_delay) +
                      ")");
  }
  const double whole = std::floor(delay_samples);
  const double frac = delay_samples - whole;
  const auto i = static_cast<std::size_t>(whole);
  const double s0 = at(i);
  if (frac == 0.0) return s0;
  const double s1 = at(i + 1);
  return s0 + frac * (s1 - s0);
}

}  // namespace pmhll
