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

#include "pmhll/signals/f0_track.h"

#include <algorithm>

#include "pmhll/errors.h"

namespace pmhll {

F0Track::F0Track(Kind kind, double a, double b, double duration)
    : kind_(kind), a_(a), b_(b), duration_(duration) {
  if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("f0 must be positive");
  if (!(duration >= 0.0)) throw ConfigError("track duration must be >= 0");
}

F0Track F0Track::constant(double f0_hz, double duration_s) {
  return F0Track(Kind::kConstant, f0_hz, f0_hz, duration_s);
}

F0Track F0Track::step(double first_hz, double second_hz, double duration_s) {
  if (!(duration_s > 0.0)) throw ConfigError("step track needs a duration");
  return F0Track(Kind::kStep, first_hz, second_hz, duration_s);
}

F0Track F0Track::sweep(double start_hz, double end_hz, double duration_s) {
  if (!(duration_s > 0.0)) throw ConfigError("sweep track needs a duration");
  return F0Track(Kind::kSweep, start_hz, end_hz, duration_s);
}

double F0Track::at(double t_s) const {
  switch (kind_) {
    case Kind::kConstant:
      return a_;
    case Kind::kStep:
      return t_s < 0.5 * duration_ ? a_ : b_;
    case Kind::kSweep: {
      const double u = std::clamp(t_s / duration_, 0.0, 1.0);
      return a_ + (b_ - a_) * u;
    }
  }
  return a_;
}

double F0Track::max_frequency() const { return std::max(a_, b_); }
double F0Track::min_frequency() const { return std::min(a_, b_); }

std::vector<double> F0Track::sample(double fs, std::size_t count) const {
  std::vector<double> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    out[n] = at(static_cast<double>(n) / fs);
  }
  return out;
}

std::string F0Track::describe() const {
  switch (kind_) {
    case Kind::kConstant:
      return "constant";
    case Kind::kStep:
      return "step";
    case Kind::kSweep:
      return "sweep";
  }
  return "unknown";
}

}  // namespace pmhll
