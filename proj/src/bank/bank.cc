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

#include "pmhll/bank/bank.h"

#include <algorithm>
#include <barrier>
#include <string>
#include <thread>

#include "pmhll/errors.h"

namespace pmhll {

std::vector<double> bank_seeds(const BankConfig& config) {
  if (!(config.f_low > 0.0) || !(config.f_low < config.f_high)) {
    throw ConfigError("bank needs 0 < f_low < f_high");
  }
  if (!(config.spacing > 1.0)) throw ConfigError("bank spacing must be > 1");
  std::vector<double> seeds;
  // Relative slack so that f_low * spacing^k landing on f_high counts.
  const double limit = config.f_high * (1.0 + 1e-9);
  for (int k = 0;; ++k) {
    const double f = config.f_low * std::pow(config.spacing, k);
    if (f > limit) break;
    seeds.push_back(f);
  }
  if (seeds.empty()) throw ConfigError("bank has no instances");
  return seeds;
}

Bank::Bank(const BankConfig& config) {
  std::vector<EngineConfig> instances;
  const double half_step = std::sqrt(config.spacing);
  for (double seed : bank_seeds(config)) {
    EngineConfig c = config.instance;
    c.fc0 = seed;
    if (config.confine) {
      c.fc_min = seed / half_step;
      c.fc_max = std::min(seed * half_step, c.fs / 2.0);
    } else {
      c.fc_min = std::min(c.fc_min, seed);
    }
    instances.push_back(c);
  }
  init(instances);
}

Bank::Bank(std::span<const EngineConfig> instances) { init(instances); }

void Bank::init(std::span<const EngineConfig> instances) {
  if (instances.empty()) throw ConfigError("bank has no instances");
  const double fs = instances.front().fs;
  double lowest = instances.front().fc_min;
  for (const EngineConfig& c : instances) {
    c.validate();
    if (c.fs != fs) throw ConfigError("bank instances must share fs");
    lowest = std::min(lowest, c.fc_min);
  }
  const std::size_t capacity = DelayLine::capacity_for(fs, lowest);
  line_ = DelayLine(capacity);
  loops_.clear();
  seeds_.clear();
  for (const EngineConfig& c : instances) {
    loops_.emplace_back(c, capacity);
    seeds_.push_back(c.fc0);
  }
  outputs_.assign(loops_.size(), TickOutput{});
}

BankTick Bank::tick(double x) {
  if (!std::isfinite(x)) {
    throw InputError("non-finite input sample at index " +
                     std::to_string(index_));
  }
  line_.push(x);
  for (std::size_t k = 0; k < loops_.size(); ++k) {
    outputs_[k] = loops_[k].advance(line_);
  }
  return {index_++, outputs_};
}

std::vector<Trace> Bank::run(std::span<const double> signal, unsigned workers) {
  for (std::size_t n = 0; n < signal.size(); ++n) {
    if (!std::isfinite(signal[n])) {
      throw InputError("non-finite input sample at index " +
                       std::to_string(index_ + n));
    }
  }
  std::vector<Trace> traces(loops_.size());
  for (Trace& t : traces) t.reserve(signal.size());

  workers = std::min<unsigned>(workers, static_cast<unsigned>(loops_.size()));
  if (workers <= 1) {
    for (double x : signal) {
      const BankTick t = tick(x);
      for (std::size_t k = 0; k < traces.size(); ++k) traces[k].append(t.outputs[k]);
    }
    return traces;
  }

  // Phase 1: this thread pushes sample n. Phase 2: workers advance their
  // instances against the now read-only line.
  std::barrier sync(static_cast<std::ptrdiff_t>(workers) + 1);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() noexcept {
        for (std::size_t n = 0; n < signal.size(); ++n) {
          sync.arrive_and_wait();
          for (std::size_t k = w; k < loops_.size(); k += workers) {
            traces[k].append(loops_[k].advance(line_));
          }
          sync.arrive_and_wait();
        }
      });
    }
    for (double x : signal) {
      line_.push(x);
      sync.arrive_and_wait();
      sync.arrive_and_wait();
    }
  }
  index_ += signal.size();
  return traces;
}

}  // namespace pmhll
