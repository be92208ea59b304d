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

#ifndef PMHLL_CORE_COMB_H_
#define PMHLL_CORE_COMB_H_

#include "pmhll/core/delay_line.h"

namespace pmhll {

struct CombOutput {
  double constructive;  // x(t) + x(t - Tc)
  double suppressive;   // x(t) - x(t - Tc)
  double delayed;       // interpolated x(t - Tc)
};

// Period-constructive and period-suppressive comb filters evaluated at the
// newest sample of `line`, with the delayed operand read at period_s * fs
// samples.
inline CombOutput comb_step(const DelayLine& line, double period_s,
                            double fs) {
  const double now = line.newest();
  const double delayed = line.read(period_s * fs);
  return {now + delayed, now - delayed, delayed};
}

}  // namespace pmhll

#endif  // PMHLL_CORE_COMB_H_
