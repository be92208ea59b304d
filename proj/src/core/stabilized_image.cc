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

#include "pmhll/core/stabilized_image.h"

#include <algorithm>

#include "pmhll/core/smoother.h"
#include "pmhll/errors.h"

namespace pmhll {

StabilizedImage::StabilizedImage(std::size_t length) : slots_(length, 0.0) {
  if (length == 0) throw ConfigError("stabilized image needs a nonzero length");
}

double StabilizedImage::update(double s, std::size_t offset, double tau_s,
                               double period_s) {
  // Past the end only when no strobe arrived for a full buffer; free-run.
  double& slot = slots_[offset % slots_.size()];
  const double a = smoothing_coefficient(tau_s, 1.0 / period_s);
  slot = a * slot + (1.0 - a) * s;
  return slot;
}

void StabilizedImage::clear() { std::fill(slots_.begin(), slots_.end(), 0.0); }

}  // namespace pmhll
