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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "pmhll/analysis/tracking.h"
#include "pmhll/bank/bank.h"
#include "pmhll/cli/presets.h"
#include "pmhll/cli/scan.h"
#include "pmhll/cli/simulation.h"
#include "pmhll/core/engine.h"
#include "pmhll/core/loop_steps.h"
#include "pmhll/errors.h"
#include "pmhll/signals/synth.h"

using namespace pmhll;

namespace {

constexpr double kFs = 5000.0;

std::vector<double> preset_signal(const char* id, int variant, std::uint64_t seed) {
  return cli::synthesize_preset(cli::find_preset(id), variant, seed, kFs).signal;
}

std::vector<double> tone_100hz() {
  HarmonicSpec s;
  for (auto [n, a] : {std::pair{1, 0.5}, {3, 0.9}, {4, 0.7}, {6, 0.9}, {7, 0.7}}) {
    s.partials.push_back({n, a, std::nullopt});
  }
  return synth_harmonic(s, F0Track::constant(100.0), kFs, 0.4, 1);
}

void require_identical(const Trace& a, const Trace& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a.fc_hz[n] != b.fc_hz[n] || a.hnr_db[n] != b.hnr_db[n] || a.cs[n] != b.cs[n] ||
        a.strobe[n] != b.strobe[n]) {
      FAIL("traces differ at sample " << n);
    }
  }
}

}  // namespace

TEST_CASE("semitone seeds over one octave") {
  BankConfig cfg;
  const auto seeds = bank_seeds(cfg);
  REQUIRE(seeds.size() == 13);
  CHECK(seeds.front() == 100.0);
  CHECK(seeds.back() == doctest::Approx(200.0));
  for (std::size_t k = 1; k < seeds.size(); ++k) {
    const CatchRange lo = catch_range(seeds[k - 1], 7);
    const CatchRange hi = catch_range(seeds[k], 7);
    CHECK(lo.high >= hi.low);
  }
  cfg.f_low = 200.0;
  cfg.f_high = 100.0;
  CHECK_THROWS_AS(bank_seeds(cfg), ConfigError);
  cfg = {};
  cfg.spacing = 1.0;
  CHECK_THROWS_AS(Bank{cfg}, ConfigError);
}

TEST_CASE("shared line equals independent engines") {
  const auto x = preset_signal("I", 1, 3);
  BankConfig cfg;
  cfg.f_low = 90.0;
  cfg.f_high = 130.0;
  Bank bank(cfg);
  const auto traces = bank.run(x);
  const std::size_t capacity = bank.delay_line().capacity();
  for (std::size_t k = 0; k < bank.size(); ++k) {
    Engine engine(bank.instance(k).config(), capacity);
    CAPTURE(k);
    require_identical(traces[k], run_engine(engine, x));
  }
}

TEST_CASE("chord bank equals independent engines") {
  const auto x = preset_signal("VI", 0, 5);
  std::vector<EngineConfig> configs;
  for (double f : {183.6, 231.3, 275.1}) {
    EngineConfig c;
    c.fc0 = f;
    c.fc_min = 96.0;
    configs.push_back(c);
  }
  Bank bank(configs);
  const auto traces = bank.run(x);
  for (std::size_t k = 0; k < configs.size(); ++k) {
    Engine engine(configs[k], bank.delay_line().capacity());
    require_identical(traces[k], run_engine(engine, x));
  }
}

TEST_CASE("parallel run matches the sequential path") {
  const auto x = preset_signal("VI", 0, 2);
  BankConfig cfg;
  cfg.f_low = 90.0;
  cfg.f_high = 400.0;
  const auto seq = Bank(cfg).run(x, 1);
  for (unsigned workers : {2u, 3u, 8u}) {
    const auto par = Bank(cfg).run(x, workers);
    REQUIRE(par.size() == seq.size());
    for (std::size_t k = 0; k < seq.size(); ++k) require_identical(par[k], seq[k]);
  }
}

TEST_CASE("tick and run agree") {
  const auto x = preset_signal("I", 0, 1);
  BankConfig cfg;
  Bank a(cfg), b(cfg);
  const auto traces = a.run(x);
  for (std::size_t n = 0; n < x.size(); ++n) {
    const BankTick t = b.tick(x[n]);
    CHECK(t.sample_index == n);
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (t.outputs[k].fc_hz != traces[k].fc_hz[n]) FAIL("mismatch at " << n);
    }
  }
}

TEST_CASE("confined instances stay in their cells") {
  const auto x = preset_signal("I", 2, 4);
  BankConfig cfg;
  cfg.f_low = 90.0;
  cfg.f_high = 400.0;
  Bank bank(cfg);
  const auto traces = bank.run(x);
  const double half = std::sqrt(cfg.spacing);
  for (std::size_t k = 0; k < bank.size(); ++k) {
    const double seed = bank.seeds()[k];
    for (double f : traces[k].fc_hz) {
      CHECK(f >= seed / half * (1.0 - 1e-12));
      CHECK(f <= seed * half * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("bank rejects non-finite samples before running") {
  BankConfig cfg;
  Bank bank(cfg);
  std::vector<double> x(100, 0.0);
  x[50] = std::nan("");
  CHECK_THROWS_AS(bank.run(x), InputError);
  CHECK_THROWS_AS(bank.tick(INFINITY), InputError);
}

TEST_CASE("silence gives no persistent lock") {
  const std::vector<double> x(2000, 0.0);
  BankConfig cfg;
  cfg.f_low = 90.0;
  cfg.f_high = 400.0;
  const cli::ScanResult r = cli::run_scan(x, cfg);
  CHECK(r.persistent_count() == 0);
}

TEST_SUITE("multi-instance-expectations") {
  TEST_CASE("single 100 Hz tone locks only the instance covering 100 Hz") {
    const cli::ScanResult r = cli::run_scan(tone_100hz(), BankConfig{});
    for (std::size_t k = 0; k < r.instances.size(); ++k) {
      const cli::ScanInstance& i = r.instances[k];
      const CatchRange c = catch_range(i.fc0_hz, 7);
      const bool covers = c.low <= 100.0 && 100.0 <= c.high;
      CAPTURE(i.fc0_hz);
      CAPTURE(i.lock_fraction);
      CAPTURE(i.mean_hnr_db);
      CHECK(i.persistent == covers);
    }
  }

  TEST_CASE("chord instances converge within 30 ms") {
    const cli::Preset& p = cli::find_preset("VI");
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      cli::SimulationRequest req;
      req.preset = "VI";
      req.seed = seed;
      const auto result = cli::run_simulation(req);
      for (std::size_t k = 0; k < result.instances.size(); ++k) {
        const auto& inst = result.instances[k];
        const auto t = convergence_time(inst.trace.fc_hz, inst.f0, kFs, 3.0, 0.02);
        CAPTURE(seed);
        CAPTURE(p.fc0[k]);
        REQUIRE(t.has_value());
        CHECK(*t <= 0.030);
      }
    }
  }
}
