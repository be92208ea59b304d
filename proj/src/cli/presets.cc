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

#include "pmhll/cli/presets.h"

#include <string>

#include "pmhll/errors.h"

namespace pmhll::cli {

namespace {

HarmonicSpec partials(std::initializer_list<std::pair<int, double>> list) {
  HarmonicSpec spec;
  for (const auto& [n, a] : list) spec.partials.push_back({n, a, std::nullopt});
  return spec;
}

std::vector<Preset> build_presets() {
  const HarmonicSpec full = partials({{1, 0.5}, {3, 0.9}, {4, 0.7}, {6, 0.9}, {7, 0.7}});
  const HarmonicSpec upper = partials({{6, 0.9}, {7, 0.7}});
  const HarmonicSpec chord_tone = partials({{3, 0.9}, {4, 0.7}, {6, 0.9}, {7, 0.7}});
  const F0Track step = F0Track::step(98.5, 101.0, 0.4);

  std::vector<Preset> out;

  Preset i;
  i.id = "I";
  i.description = "complex tone, f0 step 98.5 -> 101.0 Hz at 200 ms";
  i.duration_s = 0.4;
  i.track = step;
  i.harmonics = full;
  i.fc0 = {99.5};
  i.variants = {{"gain 0.1", 0.1, 0.0, 0, 21.5, {{0.01, 0.37}}},
                {"gain 0.5", 0.5, 0.0, 0, 7.5, {{0.02, 0.59}}},
                {"gain 1.0", 1.0, 0.0, 0, 1.5, {{0.12, 0.81}}}};
  out.push_back(i);

  Preset ii = i;
  ii.id = "II";
  ii.description = "as I at gain 0.5 with every component shifted by f_d";
  ii.variants = {{"mistune +6 Hz", 0.5, 6.0, 0, 7.5, {{1.21, 0.59}}},
                 {"mistune -6 Hz", 0.5, -6.0, 0, 7.5, {{-1.39, 0.71}}}};
  out.push_back(ii);

  Preset iii = i;
  iii.id = "III";
  iii.description = "missing fundamental: harmonics 6 and 7 only";
  iii.harmonics = upper;
  iii.variants = {{"gain 0.5", 0.5, 0.0, 0, 4.1, {{0.03, 0.56}}}};
  out.push_back(iii);

  Preset iv;
  iv.id = "IV";
  iv.description = "complex tone, linear f0 sweep 96 -> 103 Hz over 100 ms";
  iv.duration_s = 0.1;
  iv.track = F0Track::sweep(96.0, 103.0, 0.1);
  iv.harmonics = full;
  iv.fc0 = {99.5};
  iv.variants = {{"gain 0.1", 0.1, 0.0, 0, 21.3, {{0.45, 0.26}}},
                 {"gain 0.5", 0.5, 0.0, 0, 7.6, {{0.44, 0.50}}},
                 {"gain 1.0", 1.0, 0.0, 0, 1.4, {{0.90, 0.50}}}};
  out.push_back(iv);

  Preset v;
  v.id = "V";
  v.description = "iterated rippled noise, delay 1/98 s";
  v.family = SignalFamily::kIrn;
  v.duration_s = 0.2;
  v.irn_f0_hz = 98.0;
  v.fc0 = {99.5};
  v.variants = {{"5 iterations", 0.0, 0.0, 5, std::nullopt, {{0.00, 0.51}}},
                {"3 iterations", 0.0, 0.0, 3, std::nullopt, {{0.15, 0.55}}},
                {"1 iteration", 0.0, 0.0, 1, std::nullopt, {{0.60, 0.58}}}};
  out.push_back(v);

  Preset vi;
  vi.id = "VI";
  vi.description = "major chord (0, 4, 7 semitones above 170 Hz), three loops";
  vi.family = SignalFamily::kChord;
  vi.duration_s = 0.2;
  vi.harmonics = chord_tone;
  vi.chord_base_hz = 170.0;
  vi.chord_offsets = {0, 4, 7};
  vi.fc0 = {183.6, 231.3, 275.1};
  vi.variants = {{"gain 1.5", 1.5, 0.0, 0, -2.2,
                  {{-0.7, 1.6}, {-1.0, 3.6}, {-0.5, 2.7}}}};
  out.push_back(vi);

  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = build_presets();
  return table;
}

const Preset& find_preset(std::string_view id) {
  for (const Preset& p : presets()) {
    if (p.id == id) return p;
  }
  throw ConfigError("unknown preset '" + std::string(id) + "' (expected I..VI)");
}

}  // namespace pmhll::cli
