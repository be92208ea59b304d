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

#ifndef PMHLL_CORE_DELAY_LINE_H_
#define PMHLL_CORE_DELAY_LINE_H_

#include <cstddef>
#include <vector>

namespace pmhll {

// Ring buffer of the most recent input samples with fractional-delay reads.
// Delay 0 is the newest sample.
class DelayLine {
 public:
  explicit DelayLine(std::size_t capacity);

  // Smallest capacity that can serve every period down to 1 / fc_min.
  static std::size_t capacity_for(double fs, double fc_min);

  void push(double x);
  void clear();

  double newest() const { return buffer_[head_]; }

  // Sample stored `delay` whole samples ago.
  double at(std::size_t delay) const;

  // Linear interpolation between the two bracketing stored samples.
  // Throws ConfigError unless 0 <= delay_samples <= capacity() - 1.
  double read(double delay_samples) const;

  std::size_t capacity() const { return buffer_.size(); }

 private:
  std::vector<double> buffer_;
  std::size_t head_ = 0;
};

}  // namespace pmhll

#endif  // PMHLL_CORE_DELAY_LINE_H_
