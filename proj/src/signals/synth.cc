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

#include "pmhll/signals/synth.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>

#include "pmhll/errors.h"
#include "pmhll/signals/rng.h"

namespace pmhll {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double phi) {
  phi = std::fmod(phi, kTwoPi);
  return phi < 0.0 ? phi + kTwoPi : phi;
}

}  // namespace

void HarmonicSpec::validate() const {
  if (partials.empty()) throw ConfigError("harmonic spec has no partials");
  std::set<int> seen;
  for (const Partial& p : partials) {
    if (p.number < 1) throw ConfigError("harmonic number must be >= 1");
    if (!(p.amplitude > 0.0)) throw ConfigError("amplitude must be > 0");
    if (!seen.insert(p.number).second) {
      throw ConfigError("duplicate harmonic " + std::to_string(p.number));
    }
  }
}

double HarmonicSpec::nominal_power() const {
  double sum = 0.0;
  for (const Partial& p : partials) sum += 0.5 * p.amplitude * p.amplitude;
  return sum;
}

std::size_t IrnSpec::shift_samples(double fs) const {
  return static_cast<std::size_t>(std::llround(delay_s * fs));
}

std::vector<double> synth_harmonic(const HarmonicSpec& spec,
                                   const F0Track& track, double fs,
                                   double duration_s, std::uint64_t seed,
                                   std::uint64_t phase_stream) {
  spec.validate();
  if (!(fs > 0.0)) throw ConfigError("fs must be positive");
  for (const Partial& p : spec.partials) {
    const double f_max = p.number * track.max_frequency() + spec.mistune_hz;
    const double f_min = p.number * track.min_frequency() + spec.mistune_hz;
    if (f_max >= 0.5 * fs || -f_min >= 0.5 * fs) {
      throw ConfigError("harmonic " + std::to_string(p.number) +
                        " aliases at fs " + std::to_string(fs));
    }
  }

  Rng rng(seed, phase_stream);
  std::vector<double> offsets;
  offsets.reserve(spec.partials.size());
  for (const Partial& p : spec.partials) {
    offsets.push_back(p.phase ? *p.phase : kTwoPi * rng.uniform());
  }

  const std::size_t n_samples = sample_count(duration_s, fs);
  std::vector<double> out(n_samples, 0.0);
  double phi = 0.0;
  const double mistune_step = kTwoPi * spec.mistune_hz / fs;
  for (std::size_t n = 0; n < n_samples; ++n) {
    // Mistune phase from the sample index keeps it free of drift.
    const double mistune_phase =
        wrap_phase(mistune_step * static_cast<double>(n));
    double acc = 0.0;
    for (std::size_t k = 0; k < spec.partials.size(); ++k) {
      const Partial& p = spec.partials[k];
      acc += p.amplitude *
             std::sin(p.number * phi + mistune_phase - offsets[k]);
    }
    out[n] = acc;
    const double t = static_cast<double>(n) / fs;
    phi = wrap_phase(phi + kTwoPi * track.at(t) / fs);
  }
  return out;
}

double mean_power(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum / static_cast<double>(x.size());
}

double power_ratio_db(double signal_power, double noise_power) {
  if (noise_power == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(signal_power / noise_power);
}

MixResult mix_noise(std::span<const double> signal, const NoiseSpec& noise) {
  if (!(noise.gain >= 0.0)) throw ConfigError("noise gain must be >= 0");
  MixResult result;
  result.samples.assign(signal.begin(), signal.end());
  result.noise.assign(signal.size(), 0.0);
  if (noise.gain > 0.0) {
    Rng rng(noise.seed, kNoiseStream);
    for (std::size_t n = 0; n < signal.size(); ++n) {
      result.noise[n] = noise.gain * rng.gaussian();
      result.samples[n] += result.noise[n];
    }
  }
  result.snr_db = power_ratio_db(mean_power(signal), mean_power(result.noise));
  return result;
}

std::vector<double> synth_irn(const IrnSpec& spec, double fs) {
  if (spec.iterations < 1) throw ConfigError("IRN needs at least 1 iteration");
  if (!(spec.delay_s > 0.0)) throw ConfigError("IRN delay must be positive");
  const std::size_t source_len = sample_count(spec.source_duration_s, fs);
  const std::size_t segment_len = sample_count(spec.segment_duration_s, fs);
  if (segment_len == 0 || segment_len > source_len) {
    throw ConfigError("IRN segment must fit inside the source");
  }
  const std::size_t shift = spec.shift_samples(fs);
  if (shift == 0 || shift >= source_len) {
    throw ConfigError("IRN delay rounds outside the source");
  }

  Rng rng(spec.seed, kIrnStream);
  std::vector<double> s(source_len);
  for (double& v : s) v = rng.gaussian();

  std::vector<double> next(source_len);
  for (int it = 0; it < spec.iterations; ++it) {
    // next[n] = s[n] + s[n - shift], indices modulo the source length.
    for (std::size_t n = 0; n < source_len; ++n) {
      next[n] = s[n] + s[(n + source_len - shift) % source_len];
    }
    s.swap(next);
  }

  const std::size_t start = (source_len - segment_len) / 2;
  std::vector<double> out(s.begin() + static_cast<std::ptrdiff_t>(start),
                          s.begin() + static_cast<std::ptrdiff_t>(start + segment_len));
  double mean = 0.0;
  for (double v : out) mean += v;
  mean /= static_cast<double>(out.size());
  double var = 0.0;
  for (double v : out) var += (v - mean) * (v - mean);
  var /= static_cast<double>(out.size());
  const double scale = var > 0.0 ? 1.0 / std::sqrt(var) : 1.0;
  for (double& v : out) v = (v - mean) * scale;
  return out;
}

ChordSignal synth_chord(double base_f0_hz, std::span<const int> semitone_offsets,
                        const HarmonicSpec& per_tone, double fs,
                        double duration_s, std::uint64_t seed) {
  if (semitone_offsets.empty()) throw ConfigError("chord needs at least one tone");
  ChordSignal chord;
  chord.samples.assign(sample_count(duration_s, fs), 0.0);
  for (std::size_t k = 0; k < semitone_offsets.size(); ++k) {
    const double f0 = base_f0_hz * std::exp2(semitone_offsets[k] / 12.0);
    chord.tracks.push_back(F0Track::constant(f0, duration_s));
    chord.tones.push_back(synth_harmonic(per_tone, chord.tracks.back(), fs,
                                         duration_s, seed,
                                         kChordPhaseStreamBase + k));
    const auto& tone = chord.tones.back();
    for (std::size_t n = 0; n < tone.size(); ++n) chord.samples[n] += tone[n];
  }
  return chord;
}

}  // namespace pmhll
