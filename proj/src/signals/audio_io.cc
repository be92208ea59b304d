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

#include "pmhll/signals/audio_io.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>

namespace pmhll {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::vector<unsigned char> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw AudioFormatError(AudioErrorKind::kIo,
                           "cannot open " + path.string());
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint16_t le16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t le32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

float f32_from_le(const unsigned char* p) {
  return std::bit_cast<float>(le32(p));
}

void put16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xFF));
  out.push_back(static_cast<unsigned char>(v >> 8));
}

void put32(std::vector<unsigned char>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xFF));
  }
}

void put_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

void write_bytes(const std::filesystem::path& path,
                 const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw AudioFormatError(AudioErrorKind::kIo,
                           "cannot write " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw AudioFormatError(AudioErrorKind::kIo,
                           "write failed for " + path.string());
  }
}

[[noreturn]] void malformed(const std::string& what) {
  throw AudioFormatError(AudioErrorKind::kMalformed, what);
}

}  // namespace

AudioData read_wav(const std::filesystem::path& path) {
  const std::vector<unsigned char> bytes = slurp(path);
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    malformed(path.string() + ": not a RIFF/WAVE file");
  }

  struct Format {
    std::uint16_t tag;
    std::uint16_t channels;
    std::uint32_t rate;
    std::uint16_t bits;
  };
  std::optional<Format> fmt;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::uint32_t size = le32(chunk + 4);
    const std::size_t body = pos + 8;
    if (body + size > bytes.size()) {
      // Tolerate a data chunk whose declared size overruns the file only
      // if nothing follows; otherwise the header is inconsistent.
      if (std::memcmp(chunk, "data", 4) != 0) {
        malformed(path.string() + ": truncated chunk");
      }
      data = bytes.data() + body;
      data_size = bytes.size() - body;
      break;
    }
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16) malformed(path.string() + ": short fmt chunk");
      const unsigned char* f = bytes.data() + body;
      Format parsed{le16(f), le16(f + 2), le32(f + 4), le16(f + 14)};
      if (parsed.tag == kFormatExtensible) {
        if (size < 40) malformed(path.string() + ": short extensible fmt");
        parsed.tag = le16(f + 24);
      }
      fmt = parsed;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = size;
    }
    pos = body + size + (size & 1u);
  }

  if (!fmt) malformed(path.string() + ": missing fmt chunk");
  if (data == nullptr) malformed(path.string() + ": missing data chunk");
  if (fmt->rate == 0) malformed(path.string() + ": zero sample rate");
  if (fmt->channels != 1) {
    throw AudioFormatError(AudioErrorKind::kNotMono,
                           path.string() + ": " +
                               std::to_string(fmt->channels) +
                               " channels, expected mono");
  }

  AudioData audio;
  audio.sample_rate = fmt->rate;
  if (fmt->tag == kFormatPcm && fmt->bits == 16) {
    const std::size_t n = data_size / 2;
    audio.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<std::int16_t>(le16(data + 2 * i));
      audio.samples[i] = v / 32768.0;
    }
  } else if (fmt->tag == kFormatFloat && fmt->bits == 32) {
    const std::size_t n = data_size / 4;
    audio.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      audio.samples[i] = f32_from_le(data + 4 * i);
    }
  } else {
    throw AudioFormatError(AudioErrorKind::kUnsupportedEncoding,
                           path.string() + ": format tag " +
                               std::to_string(fmt->tag) + " with " +
                               std::to_string(fmt->bits) + " bits");
  }
  return audio;
}

void write_wav(const std::filesystem::path& path, std::span<const double> x,
               int sample_rate, WavEncoding encoding, double scale) {
  const bool pcm = encoding == WavEncoding::kPcm16;
  const std::uint16_t bytes_per_sample = pcm ? 2 : 4;
  const auto data_size = static_cast<std::uint32_t>(x.size() * bytes_per_sample);

  std::vector<unsigned char> out;
  out.reserve(44 + data_size);
  put_tag(out, "RIFF");
  put32(out, 36 + data_size);
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put32(out, 16);
  put16(out, pcm ? kFormatPcm : kFormatFloat);
  put16(out, 1);
  put32(out, static_cast<std::uint32_t>(sample_rate));
  put32(out, static_cast<std::uint32_t>(sample_rate) * bytes_per_sample);
  put16(out, bytes_per_sample);
  put16(out, static_cast<std::uint16_t>(8 * bytes_per_sample));
  put_tag(out, "data");
  put32(out, data_size);
  for (double v : x) {
    if (pcm) {
      const double clipped = std::clamp(v * scale, -1.0, 1.0);
      const auto q = static_cast<std::int16_t>(std::lround(clipped * 32767.0));
      put16(out, static_cast<std::uint16_t>(q));
    } else {
      put32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v * scale)));
    }
  }
  write_bytes(path, out);
}

std::vector<double> read_raw_f32(const std::filesystem::path& path) {
  const std::vector<unsigned char> bytes = slurp(path);
  if (bytes.size() % 4 != 0) {
    malformed(path.string() + ": size is not a multiple of 4 bytes");
  }
  std::vector<double> out(bytes.size() / 4);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f32_from_le(bytes.data() + 4 * i);
  }
  return out;
}

void write_raw_f32(const std::filesystem::path& path,
                   std::span<const double> x) {
  std::vector<unsigned char> out;
  out.reserve(4 * x.size());
  for (double v : x) put32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
  write_bytes(path, out);
}

}  // namespace pmhll
