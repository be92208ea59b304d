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

#ifndef PMHLL_SIGNALS_F0_TRACK_H_
#define PMHLL_SIGNALS_F0_TRACK_H_

#include <cstddef>
#include <string>
#include <vector>

namespace pmhll {

// Ground-truth fundamental frequency over [0, duration].
class F0Track {
 public:
  enum class Kind { kConstant, kStep, kSweep };

  static F0Track constant(double f0_hz, double duration_s = 0.0);
  // `first` before duration / 2, `second` from duration / 2 on.
  static F0Track step(double first_hz, double second_hz, double duration_s);
  // Linear from start to end over duration; held at `end` afterwards.
  static F0Track sweep(double start_hz, double end_hz, double duration_s);

  double at(double t_s) const;
  double max_frequency() const;
  double min_frequency() const;

  // f0 at t = n / fs for n in [0, count).
  std::vector<double> sample(double fs, std::size_t count) const;

  Kind kind() const { return kind_; }
  double first() const { return a_; }
  double second() const { return b_; }
  double duration() const { return duration_; }
  std::string describe() const;

 private:
  F0Track(Kind kind, double a, double b, double duration);

  Kind kind_;
  double a_;
  double b_;
  double duration_;
};

}  // namespace pmhll

#endif  // PMHLL_SIGNALS_F0_TRACK_H_
