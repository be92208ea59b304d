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

#ifndef PMHLL_SIGNALS_AUDIO_IO_H_
#define PMHLL_SIGNALS_AUDIO_IO_H_

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmhll {

enum class AudioErrorKind {
  kIo,                   // cannot open / read / write
  kMalformed,            // not RIFF/WAVE, truncated, missing chunks
  kUnsupportedEncoding,  // anything but 16-bit PCM or 32-bit float
  kNotMono,
};

class AudioFormatError : public std::runtime_error {
 public:
  AudioFormatError(AudioErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  AudioErrorKind kind() const { return kind_; }

 private:
  AudioErrorKind kind_;
};

struct AudioData {
  std::vector<double> samples;
  double sample_rate = 0.0;
};

enum class WavEncoding { kPcm16, kFloat32 };

// Mono RIFF/WAVE, 16-bit PCM or 32-bit IEEE float (plain or extensible).
AudioData read_wav(const std::filesystem::path& path);

// PCM16 clips to [-1, 1] after multiplying by `scale`.
void write_wav(const std::filesystem::path& path, std::span<const double> x,
               int sample_rate, WavEncoding encoding, double scale = 1.0);

// Headerless little-endian float32.
std::vector<double> read_raw_f32(const std::filesystem::path& path);
void write_raw_f32(const std::filesystem::path& path, std::span<const double> x);

}  // namespace pmhll

#endif  // PMHLL_SIGNALS_AUDIO_IO_H_
