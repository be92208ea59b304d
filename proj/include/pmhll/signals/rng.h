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

#ifndef PMHLL_SIGNALS_RNG_H_
#define PMHLL_SIGNALS_RNG_H_

#include <cstdint>
#include <optional>
#include <random>

namespace pmhll {

// Portable deterministic generator.
//
// Raw bits come from std::mt19937_64, whose output sequence is fixed by the
// standard. The engine is seeded with splitmix64(seed) xor splitmix64(stream)
// so independent draws (phases, noise, IRN source) never share a sequence.
// Uniforms take the top 53 bits; Gaussians use the Marsaglia polar method,
// implemented here rather than std::normal_distribution, whose algorithm
// differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t bits() { return engine_(); }
  // Uniform on [0, 1).
  double uniform();
  // Standard normal N(0, 1).
  double gaussian();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Stream ids used by the synthesizers.
inline constexpr std::uint64_t kPhaseStream = 1;
inline constexpr std::uint64_t kNoiseStream = 2;
inline constexpr std::uint64_t kIrnStream = 3;
inline constexpr std::uint64_t kChordPhaseStreamBase = 16;

}  // namespace pmhll

#endif  // PMHLL_SIGNALS_RNG_H_
