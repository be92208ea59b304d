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

#ifndef PMHLL_SIGNALS_SYNTH_H_
#define PMHLL_SIGNALS_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pmhll/signals/f0_track.h"

namespace pmhll {

struct Partial {
  int number = 1;                // harmonic number n >= 1
  double amplitude = 1.0;        // linear, > 0
  std::optional<double> phase;   // radians; drawn uniformly when empty
};

struct HarmonicSpec {
  std::vector<Partial> partials;
  double mistune_hz = 0.0;  // added to every component frequency

  void validate() const;
  // Sum of a_n^2 / 2.
  double nominal_power() const;
};

struct NoiseSpec {
  double gain = 0.0;
  std::uint64_t seed = 0;
};

struct IrnSpec {
  double delay_s = 1.0 / 98.0;
  int iterations = 1;
  double source_duration_s = 4.0;
  double segment_duration_s = 0.2;
  std::uint64_t seed = 0;

  // Circular shift actually applied, in samples.
  std::size_t shift_samples(double fs) const;
};

inline std::size_t sample_count(double duration_s, double fs) {
  return static_cast<std::size_t>(duration_s * fs + 0.5);
}

// Harmonic complex sum_n a_n sin(n phi(t) + 2 pi f_d t - phi0_n) with phi
// accumulated from the track. Random phases come from `seed`. Throws
// ConfigError when any component would reach fs / 2.
std::vector<double> synth_harmonic(const HarmonicSpec& spec,
                                   const F0Track& track, double fs,
                                   double duration_s, std::uint64_t seed,
                                   std::uint64_t phase_stream = 1);

struct MixResult {
  std::vector<double> samples;
  std::vector<double> noise;  // the scaled noise that was added
  // Empirical whole-signal SNR; +inf for gain 0.
  double snr_db;
};

MixResult mix_noise(std::span<const double> signal, const NoiseSpec& noise);

// Iterated rippled noise (add-same): s <- s + circshift(s, d) repeated, then
// the centred segment normalized to unit variance.
std::vector<double> synth_irn(const IrnSpec& spec, double fs);

struct ChordSignal {
  std::vector<double> samples;                // sum of tones, no noise
  std::vector<std::vector<double>> tones;     // each tone alone
  std::vector<F0Track> tracks;
};

// Tones at base * 2^(k/12) for each offset k, all rendered with `per_tone`.
ChordSignal synth_chord(double base_f0_hz, std::span<const int> semitone_offsets,
                        const HarmonicSpec& per_tone, double fs,
                        double duration_s, std::uint64_t seed);

double mean_power(std::span<const double> x);
double power_ratio_db(double signal_power, double noise_power);

}  // namespace pmhll

#endif  // PMHLL_SIGNALS_SYNTH_H_
