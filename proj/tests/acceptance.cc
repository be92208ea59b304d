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

// Acceptance run: one PASS/FAIL line per criterion. Stochastic quantities are
// averaged over seeds 1..10; event timings must hold for every seed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "pmhll/analysis/tracking.h"
#include "pmhll/bank/bank.h"
#include "pmhll/cli/presets.h"
#include "pmhll/cli/simulation.h"
#include "pmhll/core/comb.h"
#include "pmhll/core/delay_line.h"
#include "pmhll/core/engine.h"
#include "pmhll/core/loop_steps.h"
#include "pmhll/core/strobe.h"
#include "pmhll/core/trace.h"
#include "pmhll/signals/synth.h"

using namespace pmhll;

namespace {

constexpr double kFs = 5000.0;
constexpr std::uint64_t kSeeds = 10;
constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, std::string note) {
    pass = pass && ok;
    notes.push_back((ok ? "" : "!") + std::move(note));
  }
};

cli::SimulationResult simulate(const char* preset, int variant, std::uint64_t seed) {
  cli::SimulationRequest req;
  req.preset = preset;
  req.variant = variant;
  req.seed = seed;
  return cli::run_simulation(req);
}

struct Averages {
  std::vector<double> mean, std, hnr_locked, hnr_window;
};

double window_mean(const std::vector<double>& v, double exclude) {
  const std::size_t start = evaluation_start(v.size(), exclude);
  double s = 0.0;
  for (std::size_t n = start; n < v.size(); ++n) s += v[n];
  return s / static_cast<double>(v.size() - start);
}

Averages seed_average(const char* preset, int variant) {
  Averages a;
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    const auto r = simulate(preset, variant, seed);
    a.mean.resize(r.instances.size());
    a.std.resize(r.instances.size());
    a.hnr_locked.resize(r.instances.size());
    a.hnr_window.resize(r.instances.size());
    for (std::size_t k = 0; k < r.instances.size(); ++k) {
      const auto& rep = r.instances[k].report;
      a.mean[k] += rep.error->mean / kSeeds;
      a.std[k] += rep.error->std / kSeeds;
      a.hnr_locked[k] += rep.mean_hnr_db / kSeeds;
      a.hnr_window[k] += window_mean(r.instances[k].trace.hnr_db, 0.1) / kSeeds;
    }
  }
  return a;
}

std::string stat(double mean, double std) { return fmt::format("{:+.2f} ({:.2f})", mean, std); }

Verdict criterion_1() {
  Verdict v;
  const double std_limit[] = {0.6, 0.9, 1.2};
  for (int g = 0; g < 3; ++g) {
    const Averages a = seed_average("I", g);
    const bool ok = std::abs(a.mean[0]) <= 0.3 && a.std[0] <= std_limit[g];
    v.require(ok, fmt::format("gain {}: {}", cli::find_preset("I").variants[g].noise_gain,
                              stat(a.mean[0], a.std[0])));
  }
  return v;
}

Verdict criterion_2() {
  Verdict v;
  const std::size_t jump = 1000;
  const double period = kFs / 101.0;
  const auto drop_limit = static_cast<std::size_t>(std::ceil(1.5 * period));
  const auto hold = static_cast<std::size_t>(std::ceil(period));
  int dropped = 0, relocked = 0;
  double worst_min_hnr = -1e9, worst_relock = 0.0;
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    const auto r = simulate("I", 1, seed);
    const auto& t = r.instances[0].trace;
    const auto& f0 = r.instances[0].f0;
    double min_hnr = 1e9;
    for (std::size_t n = jump; n <= jump + drop_limit; ++n) min_hnr = std::min(min_hnr, t.hnr_db[n]);
    worst_min_hnr = std::max(worst_min_hnr, min_hnr);
    if (min_hnr < 0.0) ++dropped;

    // Lock regained: HNR > 0 and |err| < 1 Hz for one full period.
    std::optional<std::size_t> regain;
    std::size_t run = 0;
    for (std::size_t n = jump; n < t.size(); ++n) {
      run = (t.hnr_db[n] > 0.0 && std::abs(t.fc_hz[n] - f0[n]) < 1.0) ? run + 1 : 0;
      if (run >= hold) {
        regain = n + 1 - hold - jump;
        break;
      }
    }
    const double periods = regain ? *regain / period : INFINITY;
    worst_relock = std::max(worst_relock, periods);
    if (periods <= 4.0) ++relocked;
  }
  v.require(dropped == static_cast<int>(kSeeds),
            fmt::format("HNR < 0 dB within 1.5 periods in {}/{} seeds (highest minimum {:.1f} dB)",
                        dropped, kSeeds, worst_min_hnr));
  v.require(relocked == static_cast<int>(kSeeds),
            fmt::format("relock within 4 periods in {}/{} seeds (slowest {:.2f})", relocked,
                        kSeeds, worst_relock));
  return v;
}

Verdict criterion_3() {
  Verdict v;
  for (int m = 0; m < 2; ++m) {
    const Averages a = seed_average("II", m);
    const double sign = m == 0 ? 1.0 : -1.0;
    const double bias = a.mean[0];
    const bool ok = bias * sign > 0.0 && std::abs(bias) >= 0.7 && std::abs(bias) <= 2.0 &&
                    a.std[0] <= 1.0;
    v.require(ok, fmt::format("mistune {:+.0f} Hz: {}", 6.0 * sign, stat(bias, a.std[0])));
  }
  return v;
}

Verdict criterion_4() {
  Verdict v;
  const Averages iii = seed_average("III", 0);
  const Averages one = seed_average("I", 1);
  v.require(std::abs(iii.mean[0]) <= 0.3 && iii.std[0] <= 0.9,
            "error " + stat(iii.mean[0], iii.std[0]));
  const double drop = one.hnr_locked[0] - iii.hnr_locked[0];
  v.require(std::abs(drop - 3.4) <= 1.5,
            fmt::format("HNR {:.1f} dB vs {:.1f} dB, drop {:.2f} dB", iii.hnr_locked[0],
                        one.hnr_locked[0], drop));
  return v;
}

Verdict criterion_5() {
  Verdict v;
  for (int g = 0; g < 3; ++g) {
    const Averages a = seed_average("IV", g);
    double lag = 0.0;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      const auto r = simulate("IV", g, seed);
      lag += tracking_lag(r.instances[0].trace.fc_hz, r.instances[0].f0, kFs, 0.03) / kSeeds;
    }
    const bool ok = std::abs(a.mean[0]) <= 1.2 && a.std[0] <= 0.9 && lag < 1.0 / 99.5;
    v.require(ok, fmt::format("gain {}: {}, lag {:.1f} ms",
                              cli::find_preset("IV").variants[g].noise_gain,
                              stat(a.mean[0], a.std[0]), lag * 1e3));
  }
  return v;
}

Verdict criterion_6() {
  Verdict v;
  const double mean_limit[] = {0.4, 0.5, 1.0};
  const int iterations[] = {5, 3, 1};
  for (int k = 0; k < 3; ++k) {
    const Averages a = seed_average("V", k);
    v.require(std::abs(a.mean[0]) <= mean_limit[k] && a.std[0] <= 1.0,
              fmt::format("{} it.: {}", iterations[k], stat(a.mean[0], a.std[0])));
  }
  return v;
}

Verdict criterion_7() {
  Verdict v;
  const Averages a = seed_average("VI", 0);
  std::vector<int> converged(3, 0);
  std::vector<double> slowest(3, 0.0);
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    const auto r = simulate("VI", 0, seed);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& inst = r.instances[k];
      const auto t = convergence_time(inst.trace.fc_hz, inst.f0, kFs, 3.0, 0.02);
      const double time = t.value_or(INFINITY);
      slowest[k] = std::max(slowest[k], time);
      if (time <= 0.030) ++converged[k];
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    v.require(converged[k] == static_cast<int>(kSeeds),
              fmt::format("tone {} converged in {}/{} seeds (slowest {:.0f} ms)", k + 1,
                          converged[k], kSeeds, slowest[k] * 1e3));
    v.require(std::abs(a.mean[k]) <= 2.0 && a.std[k] <= 6.0,
              fmt::format("tone {} {}", k + 1, stat(a.mean[k], a.std[k])));
    v.require(a.hnr_window[k] >= 3.0 && a.hnr_window[k] <= 8.0,
              fmt::format("tone {} HNR {:.1f} dB", k + 1, a.hnr_window[k]));
  }
  return v;
}

Verdict criterion_8() {
  Verdict v;
  const std::pair<const char*, int> rows[] = {{"I", 0}, {"I", 1}, {"I", 2}, {"III", 0},
                                              {"IV", 0}, {"IV", 1}, {"IV", 2}};
  for (const auto& [id, variant] : rows) {
    const cli::Preset& p = cli::find_preset(id);
    const double reference = *p.variants[variant].reference_snr_db;
    double mean = 0.0, worst = 0.0;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      const double snr = *cli::synthesize_preset(p, variant, seed, kFs).snr.whole_signal_db;
      mean += snr / kSeeds;
      worst = std::max(worst, std::abs(snr - reference));
    }
    v.require(std::abs(mean - reference) <= 0.3,
              fmt::format("{}/{}: {:.2f} vs {:.1f} dB (max seed dev {:.2f})", id, variant, mean,
                          reference, worst));
  }
  return v;
}

double tail_mean(const std::vector<double>& x, std::size_t from) {
  double s = 0.0;
  for (std::size_t n = from; n < x.size(); ++n) s += x[n];
  return s / static_cast<double>(x.size() - from);
}

Trace open_loop_sine(double fc, double f, std::size_t count) {
  EngineConfig cfg;
  cfg.fc0 = fc;
  cfg.fc_min = std::min(cfg.fc_min, fc);
  cfg.hold_frequency = true;
  Engine engine(cfg);
  Trace t;
  for (std::size_t n = 0; n < count; ++n) t.append(engine.tick(std::sin(2.0 * kPi * f * n / kFs)));
  return t;
}

Verdict criterion_9() {
  Verdict v;

  // Comb identities on integer-period inputs.
  double worst = 0.0;
  DelayLine line(64), flip(64);
  for (int n = 0; n < 1000; ++n) {
    const double base = std::cos(0.37 * (n % 50)) + 0.3 * std::sin(1.1 * (n % 50));
    line.push(base);
    flip.push((n / 50) % 2 ? -base : base);
    if (n < 50) continue;
    const CombOutput c = comb_step(line, 0.01, kFs);
    const CombOutput h = comb_step(flip, 0.01, kFs);
    const double scale = std::max(std::abs(base), 1e-300);
    worst = std::max({worst, std::abs(c.constructive - 2.0 * base) / scale,
                      std::abs(c.suppressive) / scale, std::abs(h.constructive) / scale,
                      std::abs(h.suppressive - 2.0 * flip.newest()) / scale});
  }
  v.require(worst <= 1e-12, fmt::format("comb identities max rel err {:.1e}", worst));

  double cot_err = 0.0;
  for (int k = 1; k <= 10; ++k) {
    const double eps = 0.01 * k;
    const Trace t = open_loop_sine(100.0, 100.0 * (1.0 + eps), 5000);
    const double expected = 20.0 * std::log10(std::abs(1.0 / std::tan(kPi * eps)));
    cot_err = std::max(cot_err, std::abs(tail_mean(t.hnr_db, 2500) - expected));
  }
  v.require(cot_err <= 1.0, fmt::format("cot law max err {:.2f} dB", cot_err));

  int sign_ok = 0;
  for (int k = -10; k <= 10; ++k) {
    if (k == 0) continue;
    const double fc = 100.0;
    const double f0 = fc * (1.0 + k / 140.0);
    const Trace t = open_loop_sine(fc, f0, 2000);
    const double cs = tail_mean(t.cs, 1000);
    if ((cs > 0.0) == (fc > f0) && cs != 0.0) ++sign_ok;
  }
  v.require(sign_ok == 20, fmt::format("control sign {}/20", sign_ok));

  double g_err = 0.0;
  for (double fc : {50.0, 96.0, 100.0, 170.0, 254.72, 1000.0}) {
    const double g = adaptation_factor(fc, kFs, 3.0);
    g_err = std::max(g_err, std::abs(std::pow(g, 3.0 * kFs / fc) / std::exp2(1.0 / 12.0) - 1.0));
  }
  v.require(g_err <= 1e-9, fmt::format("adaptation identity rel err {:.1e}", g_err));
  return v;
}

Verdict criterion_10() {
  Verdict v;

  const std::vector<double> x = cli::synthesize_preset(cli::find_preset("I"), 1, 1, kFs).signal;
  EngineConfig cfg;
  cfg.fc0 = 99.5;
  Engine ref_engine(cfg);
  const Trace ref = run_engine(ref_engine, x);
  bool fc_identical = true;
  double hnr_dev = 0.0;
  for (double scale : {0.25, 3.7, 8.0, 1e3}) {
    std::vector<double> y(x);
    for (double& s : y) s *= scale;
    Engine e(cfg);
    const Trace t = run_engine(e, y);
    fc_identical = fc_identical && t.fc_hz == ref.fc_hz;
    for (std::size_t n = 0; n < t.size(); ++n) hnr_dev = std::max(hnr_dev, std::abs(t.hnr_db[n] - ref.hnr_db[n]));
  }
  v.require(fc_identical && hnr_dev <= 1e-6,
            fmt::format("amplitude scaling: fc {}, HNR dev {:.1e} dB",
                        fc_identical ? "identical" : "differs", hnr_dev));

  // Same tone at s times the frequency and 1/s the duration.
  const cli::Preset& p = cli::find_preset("I");
  auto run_scaled = [&](double s) {
    const F0Track track = F0Track::step(98.5 * s, 101.0 * s, 0.4 / s);
    const auto y = synth_harmonic(p.harmonics, track, kFs, 0.4 / s, 1);
    EngineConfig c;
    c.fc0 = 99.5 * s;
    c.fc_min = 96.0 * s;
    Engine e(c);
    return run_engine(e, y).fc_hz;
  };
  const auto base = run_scaled(1.0);
  double rel = 0.0;
  for (double s : {2.0, 0.5}) {
    const auto fc = run_scaled(s);
    for (std::size_t n = evaluation_start(base.size(), 0.1); n < base.size(); ++n) {
      const std::size_t m = static_cast<std::size_t>(std::llround(n / s));
      if (m >= fc.size()) break;
      rel = std::max(rel, std::abs(fc[m] / (s * base[n]) - 1.0));
    }
  }
  v.require(rel <= 0.01, fmt::format("frequency scaling max rel dev {:.2f}%", rel * 100.0));

  StrobeGenerator strobe;
  int strobes = 0;
  for (int n = 0; n <= 500; ++n) strobes += strobe.step(50.0 + 100.0 * n / 500.0, kFs);
  v.require(strobes == 10, fmt::format("sweep strobes {}", strobes));

  double noise_hnr = 0.0;
  for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
    const std::vector<double> silent(2000, 0.0);
    const auto noise = mix_noise(silent, {1.0, seed}).samples;
    Engine e(EngineConfig{});
    noise_hnr += window_mean(run_engine(e, noise).hnr_db, 0.1) / kSeeds;
  }
  v.require(std::abs(noise_hnr) <= 1.0, fmt::format("noise HNR {:+.2f} dB", noise_hnr));

  const auto chord = cli::synthesize_preset(cli::find_preset("VI"), 0, 1, kFs).signal;
  BankConfig bc;
  bc.f_low = 90.0;
  bc.f_high = 400.0;
  Bank bank(bc);
  const auto traces = bank.run(chord, 4);
  bool equal = true;
  for (std::size_t k = 0; k < bank.size(); ++k) {
    Engine e(bank.instance(k).config(), bank.delay_line().capacity());
    const Trace t = run_engine(e, chord);
    equal = equal && t.fc_hz == traces[k].fc_hz && t.hnr_db == traces[k].hnr_db &&
            t.cs == traces[k].cs;
  }
  v.require(equal, fmt::format("bank of {} vs engines {}", bank.size(),
                               equal ? "bitwise equal" : "differ"));
  return v;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    Verdict (*run)();
  };
  const Entry entries[] = {
      {1, "step tone tracking error", criterion_1},
      {2, "relock after the f0 jump", criterion_2},
      {3, "mistuning bias", criterion_3},
      {4, "missing fundamental", criterion_4},
      {5, "f0 sweep", criterion_5},
      {6, "iterated rippled noise", criterion_6},
      {7, "three-tone chord", criterion_7},
      {8, "SNR calibration", criterion_8},
      {9, "analytic oracles", criterion_9},
      {10, "properties", criterion_10},
  };
  int failed = 0;
  for (const Entry& e : entries) {
    const Verdict v = e.run();
    std::string detail;
    for (const auto& n : v.notes) detail += (detail.empty() ? "" : "; ") + n;
    fmt::print("{}  {:2}  {}: {}\n", v.pass ? "PASS" : "FAIL", e.id, e.title, detail);
    if (!v.pass) ++failed;
  }
  fmt::print("{} of {} criteria passed\n", 10 - failed, 10);
  return failed == 0 ? 0 : 1;
}
