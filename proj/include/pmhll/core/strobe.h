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

#ifndef PMHLL_CORE_STROBE_H_
#define PMHLL_CORE_STROBE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pmhll {

// Integrates the oscillator frequency into a normalized phase and emits a
// strobe whenever the phase wraps past 1.
//
// Sample 0 acts as the reference point: no strobe is emitted there, and the
// samples-since-strobe counter runs from it until the first wrap.
class StrobeGenerator {
 public:
  // Advances one sample at oscillator frequency fc. Returns true on a wrap.
  bool step(double fc, double fs);

  // Normalized phase in [0, 1).
  double phase() const { return phase_; }
  std::size_t samples_since_strobe() const { return since_strobe_; }
  std::uint64_t samples_seen() const { return samples_seen_; }

  // Sample indices of all strobes so far, strictly increasing.
  std::span<const std::uint64_t> strobe_times() const { return times_; }

  void reset();

 private:
  double phase_ = 0.0;
  std::size_t since_strobe_ = 0;
  std::uint64_t samples_seen_ = 0;
  std::vector<std::uint64_t> times_;
};

}  // namespace pmhll

#endif  // PMHLL_CORE_STROBE_H_
