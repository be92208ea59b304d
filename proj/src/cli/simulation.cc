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

#include "pmhll/cli/simulation.h"

#include <string>

#include "pmhll/bank/bank.h"
#include "pmhll/core/engine.h"
#include "pmhll/errors.h"
#include "pmhll/signals/rng.h"
#include "pmhll/signals/synth.h"

namespace pmhll::cli {

const char* tool_version() { return PMHLL_VERSION; }

namespace {

const PresetVariant& pick_variant(const Preset& preset, int variant) {
  if (variant < 0 || static_cast<std::size_t>(variant) >= preset.variants.size()) {
    throw ConfigError("preset " + preset.id + " has variants 0.." +
                      std::to_string(preset.variants.size() - 1));
  }
  return preset.variants[static_cast<std::size_t>(variant)];
}

}  // namespace

SynthesizedSignal synthesize_preset(const Preset& preset, int variant,
                                    std::uint64_t seed, double fs) {
  const PresetVariant& v = pick_variant(preset, variant);
  SynthesizedSignal out;
  const std::size_t n = sample_count(preset.duration_s, fs);

  switch (preset.family) {
    case SignalFamily::kHarmonic: {
      HarmonicSpec spec = preset.harmonics;
      spec.mistune_hz = v.mistune_hz;
      out.clean = synth_harmonic(spec, preset.track, fs, preset.duration_s,
                                 seed, kPhaseStream);
      out.f0.push_back(preset.track.sample(fs, n));
      break;
    }
    case SignalFamily::kIrn: {
      IrnSpec spec;
      spec.delay_s = 1.0 / preset.irn_f0_hz;
      spec.iterations = v.irn_iterations;
      spec.segment_duration_s = preset.duration_s;
      spec.seed = seed;
      out.clean = synth_irn(spec, fs);
      // Ground truth is the rounded delay actually applied.
      const double realized = fs / static_cast<double>(spec.shift_samples(fs));
      out.f0.push_back(std::vector<double>(out.clean.size(), realized));
      break;
    }
    case SignalFamily::kChord: {
      const ChordSignal chord =
          synth_chord(preset.chord_base_hz, preset.chord_offsets,
                      preset.harmonics, fs, preset.duration_s, seed);
      out.clean = chord.samples;
      for (const F0Track& t : chord.tracks) out.f0.push_back(t.sample(fs, n));
      break;
    }
  }

  const MixResult mixed = mix_noise(out.clean, {v.noise_gain, seed});
  out.signal = mixed.samples;
  if (v.noise_gain > 0.0) out.snr.whole_signal_db = mixed.snr_db;

  if (preset.family == SignalFamily::kChord && v.noise_gain > 0.0) {
    const ChordSignal chord =
        synth_chord(preset.chord_base_hz, preset.chord_offsets,
                    preset.harmonics, fs, preset.duration_s, seed);
    const double noise_power = mean_power(mixed.noise);
    for (std::size_t k = 0; k < chord.tones.size(); ++k) {
      std::vector<double> rest(mixed.noise);
      for (std::size_t j = 0; j < chord.tones.size(); ++j) {
        if (j == k) continue;
        for (std::size_t i = 0; i < rest.size(); ++i) rest[i] += chord.tones[j][i];
      }
      const double tone_power = mean_power(chord.tones[k]);
      out.snr.tone_vs_noise_db.push_back(power_ratio_db(tone_power, noise_power));
      out.snr.tone_vs_noise_and_others_db.push_back(
          power_ratio_db(tone_power, mean_power(rest)));
    }
  }
  return out;
}

SimulationResult run_simulation(const SimulationRequest& request) {
  SimulationResult result;
  result.request = request;
  result.preset = &find_preset(request.preset);
  result.variant = &pick_variant(*result.preset, request.variant);
  const double fs = request.engine.fs;

  SynthesizedSignal synth =
      synthesize_preset(*result.preset, request.variant, request.seed, fs);
  result.clean = std::move(synth.clean);
  result.signal = std::move(synth.signal);
  result.snr = std::move(synth.snr);

  std::vector<EngineConfig> configs;
  for (double fc0 : result.preset->fc0) {
    EngineConfig c = request.engine;
    c.fc0 = fc0;
    configs.push_back(c);
  }

  std::vector<Trace> traces;
  if (configs.size() == 1) {
    Engine engine(configs.front());
    traces.push_back(run_engine(engine, result.signal));
  } else {
    Bank bank(configs);
    traces = bank.run(result.signal);
  }

  ReportOptions options;
  options.exclude_fraction = request.exclude_fraction;
  for (std::size_t k = 0; k < configs.size(); ++k) {
    InstanceResult inst;
    inst.config = configs[k];
    inst.f0 = std::move(synth.f0[k]);
    inst.trace = std::move(traces[k]);
    inst.report = make_report(inst.trace, inst.f0, fs, options);
    result.instances.push_back(std::move(inst));
  }
  return result;
}

}  // namespace pmhll::cli
