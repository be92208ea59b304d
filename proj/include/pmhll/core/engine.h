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

#ifndef PMHLL_CORE_ENGINE_H_
#define PMHLL_CORE_ENGINE_H_

#include <cstddef>
#include <span>

#include "pmhll/core/delay_line.h"
#include "pmhll/core/engine_config.h"
#include "pmhll/core/loop_steps.h"
#include "pmhll/core/stabilized_image.h"
#include "pmhll/core/strobe.h"

namespace pmhll {

struct TickOutput {
  double fc_hz = 0.0;   // oscillator frequency after this sample's update
  double hnr_db = 0.0;
  double cs = 0.0;      // radians per sample
  bool strobe = false;
  bool locked = false;  // hnr_db > 0
  double y_p = 0.0;     // raw comb outputs
  double y_m = 0.0;
};

// Loop state without its input delay line. Several loops can read one shared
// line; Engine pairs a loop with a line of its own.
class Loop {
 public:
  // image_length must be at least DelayLine::capacity_for(fs, fc_min).
  Loop(const EngineConfig& config, std::size_t image_length);

  // Runs one sample; line.newest() must already hold the current input.
  TickOutput advance(const DelayLine& line);

  double frequency() const { return fc_; }
  double period() const { return 1.0 / fc_; }
  const EngineConfig& config() const { return config_; }
  const StrobeGenerator& strobes() const { return strobes_; }
  const StabilizedImage& constructive_image() const { return image_p_; }
  const StabilizedImage& suppressive_image() const { return image_m_; }

 private:
  EngineConfig config_;
  double fc_;
  StrobeGenerator strobes_;
  StabilizedImage image_p_;
  StabilizedImage image_m_;
  HnrState hnr_;
  ControlState control_;
};

// One self-contained tracker: consumes a sample, emits fc / HNR / lock.
class Engine {
 public:
  explicit Engine(const EngineConfig& config);
  // Larger delay capacity than the config requires, e.g. to mirror a bank.
  Engine(const EngineConfig& config, std::size_t delay_capacity);

  // Throws InputError on a non-finite sample.
  TickOutput tick(double x);

  const Loop& loop() const { return loop_; }
  const DelayLine& delay_line() const { return line_; }
  double frequency() const { return loop_.frequency(); }

 private:
  DelayLine line_;
  Loop loop_;
};

}  // namespace pmhll

#endif  // PMHLL_CORE_ENGINE_H_
