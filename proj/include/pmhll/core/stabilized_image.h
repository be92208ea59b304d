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

#ifndef PMHLL_CORE_STABILIZED_IMAGE_H_
#define PMHLL_CORE_STABILIZED_IMAGE_H_

#include <cstddef>
#include <vector>

namespace pmhll {

// Period-synchronous running average: one lowpass state per offset since the
// last strobe. Each slot sees one new sample per oscillator period, so its
// smoother runs at the oscillator rate, not at fs.
class StabilizedImage {
 public:
  explicit StabilizedImage(std::size_t length);

  // Averages `s` into the slot for `offset` (wrapped modulo length()) and
  // returns the updated slot value. tau_s is the time constant in seconds
  // and period_s the interval between successive updates of a slot.
  double update(double s, std::size_t offset, double tau_s, double period_s);

  double slot(std::size_t offset) const { return slots_[offset % slots_.size()]; }
  std::size_t length() const { return slots_.size(); }
  void clear();

 private:
  std::vector<double> slots_;
};

}  // namespace pmhll

#endif  // PMHLL_CORE_STABILIZED_IMAGE_H_
