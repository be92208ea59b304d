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

#ifndef PMHLL_BANK_BANK_H_
#define PMHLL_BANK_BANK_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pmhll/core/delay_line.h"
#include "pmhll/core/engine.h"
#include "pmhll/core/trace.h"

namespace pmhll {

struct BankConfig {
  double f_low = 100.0;
  double f_high = 200.0;
  double spacing = std::exp2(1.0 / 12.0);
  // Clamp each instance to [seed / sqrt(spacing), seed * sqrt(spacing)].
  bool confine = true;
  // fc0, fc_min and fc_max are overridden per instance.
  EngineConfig instance;
};

struct BankTick {
  std::uint64_t sample_index;
  std::span<const TickOutput> outputs;  // valid until the next tick()
};

// Loop instances advanced in lockstep over one shared input delay line.
class Bank {
 public:
  // Seeds at f_low * spacing^k for every k with seed <= f_high.
  explicit Bank(const BankConfig& config);

  // Explicit per-instance configurations (e.g. hand-picked seeds).
  explicit Bank(std::span<const EngineConfig> instances);

  // Throws InputError on a non-finite sample before any instance runs.
  BankTick tick(double x);

  // Processes a whole signal and returns one trace per instance. With
  // workers > 1 the instances are split across threads that meet at a
  // barrier once per sample; results equal the sequential path bitwise.
  std::vector<Trace> run(std::span<const double> signal, unsigned workers = 1);

  std::size_t size() const { return loops_.size(); }
  const Loop& instance(std::size_t k) const { return loops_[k]; }
  const std::vector<double>& seeds() const { return seeds_; }
  const DelayLine& delay_line() const { return line_; }

 private:
  void init(std::span<const EngineConfig> instances);

  std::vector<double> seeds_;
  DelayLine line_{2};
  std::vector<Loop> loops_;
  std::vector<TickOutput> outputs_;
  std::uint64_t index_ = 0;
};

// Seed frequencies a BankConfig produces; throws ConfigError when empty.
std::vector<double> bank_seeds(const BankConfig& config);

}  // namespace pmhll

#endif  // PMHLL_BANK_BANK_H_
