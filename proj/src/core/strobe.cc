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

#include "pmhll/core/strobe.h"

namespace pmhll {

bool StrobeGenerator::step(double fc, double fs) {
  const std::uint64_t index = samples_seen_++;
  phase_ += fc / fs;
  if (phase_ >= 1.0) {
    phase_ -= 1.0;
    // fc <= fs / 2, so a single subtraction always lands in [0, 1).
    times_.push_back(index);
    since_strobe_ = 0;
    return true;
  }
  // Sample 0 is the image reference, so its offset stays 0.
  if (index > 0) ++since_strobe_;
  return false;
}

void StrobeGenerator::reset() {
  phase_ = 0.0;
  since_strobe_ = 0;
  samples_seen_ = 0;
  times_.clear();
}

}  // namespace pmhll
