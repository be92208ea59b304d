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

#include "pmhll/core/engine.h"

#include <cmath>
#include <string>

#include "pmhll/core/comb.h"
#include "pmhll/errors.h"

namespace pmhll {

void EngineConfig::validate() const {
  if (!(fs > 0.0)) throw ConfigError("fs must be positive");
  const double hi = upper_frequency();
  if (!(fc_min > 0.0)) throw ConfigError("fc_min must be positive");
  if (!(fc_min <= fc0 && fc0 <= hi)) {
    throw ConfigError("fc0 " + std::to_string(fc0) + " outside [" +
                      std::to_string(fc_min) + ", " + std::to_string(hi) + "]");
  }
  if (!(hi <= fs / 2.0)) throw ConfigError("fc_max must not exceed fs / 2");
  if (np < 1) throw ConfigError("np must be >= 1");
  if (!(tau_si_mult > 0.0 && tau_hnr_mult > 0.0 && tau_hnr_post_mult > 0.0 &&
        tau_cs_mult > 0.0)) {
    throw ConfigError("time-constant multipliers must be positive");
  }
  if (!(adapt_periods > 0.0)) throw ConfigError("adapt_periods must be positive");
}

namespace {

const EngineConfig& validated(const EngineConfig& config) {
  config.validate();
  return config;
}

}  // namespace

Loop::Loop(const EngineConfig& config, std::size_t image_length)
    : config_(validated(config)),
      fc_(config.fc0),
      image_p_(image_length),
      image_m_(image_length) {
  if (image_length < DelayLine::capacity_for(config.fs, config.fc_min)) {
    throw ConfigError("image length too short for fc_min");
  }
}

TickOutput Loop::advance(const DelayLine& line) {
  const double fs = config_.fs;
  const double tc = 1.0 / fc_;

  const CombOutput comb = comb_step(line, tc, fs);

  TickOutput out;
  out.strobe = strobes_.step(fc_, fs);
  const std::size_t offset = strobes_.samples_since_strobe();

  const double yp_si =
      image_p_.update(comb.constructive, offset, config_.tau_si_mult * tc, tc);
  const double ym_si =
      image_m_.update(comb.suppressive, offset, config_.tau_si_mult * tc, tc);

  out.hnr_db = hnr_step(hnr_, yp_si, ym_si, config_.tau_hnr_mult * tc,
                        config_.tau_hnr_post_mult * tc, fs);
  out.cs = control_step(control_, yp_si, ym_si, config_.tau_cs_mult * tc, fs);
  if (!config_.hold_frequency) fc_ = adapt_step(fc_, out.cs, config_);

  out.fc_hz = fc_;
  out.locked = out.hnr_db > 0.0;
  out.y_p = comb.constructive;
  out.y_m = comb.suppressive;
  return out;
}

Engine::Engine(const EngineConfig& config)
    : Engine(config, DelayLine::capacity_for(validated(config).fs,
                                             config.fc_min)) {}

Engine::Engine(const EngineConfig& config, std::size_t delay_capacity)
    : line_(delay_capacity), loop_(config, delay_capacity) {}

TickOutput Engine::tick(double x) {
  if (!std::isfinite(x)) {
    throw InputError("non-finite input sample at index " +
                     std::to_string(loop_.strobes().samples_seen()));
  }
  line_.push(x);
  return loop_.advance(line_);
}

}  // namespace pmhll
