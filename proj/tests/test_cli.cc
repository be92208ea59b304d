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
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmhll/cli/commands.h"
#include "pmhll/cli/outputs.h"
#include "pmhll/cli/presets.h"
#include "pmhll/core/engine.h"
#include "pmhll/core/trace.h"
#include "pmhll/signals/audio_io.h"

using namespace pmhll;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> store{"pmhll"};
  store.insert(store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : store) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("pmhll_cli_" + name);
  fs::remove_all(p);
  return p;
}

json summary(const fs::path& dir) { return json::parse(slurp(dir / "summary.json")); }

std::size_t persistent_locks(const fs::path& dir) {
  std::istringstream in(slurp(dir / "scan_summary.csv"));
  std::string line;
  std::getline(in, line);
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '1') ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("list-presets and help") {
  const Run r = invoke({"list-presets"});
  CHECK(r.code == 0);
  for (const char* id : {"I ", "II ", "III ", "IV ", "V ", "VI "}) {
    const bool listed = r.out.rfind(id, 0) == 0 || r.out.find(std::string("\n") + id) != std::string::npos;
    CHECK(listed);
  }
  CHECK(invoke({"--help"}).code == 0);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
}

TEST_CASE("sim on the step tone writes its artifacts") {
  const fs::path dir = scratch("sim_i");
  const Run r = invoke({"sim", "--preset", "I", "--variant", "1", "--seed", "7", "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "trace.csv"));
  CHECK(fs::exists(dir / "plot.svg"));
  CHECK(slurp(dir / "plot.svg").rfind("<svg", 0) == 0);
  CHECK(slurp(dir / "trace.csv").rfind(cli::kTraceCsvHeader, 0) == 0);

  const json s = summary(dir);
  CHECK(s["seed"] == 7);
  CHECK(s["manifest"]["preset"] == "I");
  CHECK(s["manifest"]["engines"][0]["fc0"] == 99.5);
  const json& inst = s["instances"][0];
  CHECK(std::abs(inst["mean_err_hz"].get<double>()) <= 0.3);
  CHECK(inst["std_err_hz"].get<double>() <= 0.9);
  CHECK(std::abs(s["snr"]["whole_signal_db"].get<double>() - 7.5) <= 0.3);
}

TEST_CASE("sim on single-iteration IRN") {
  const fs::path dir = scratch("sim_v");
  REQUIRE(invoke({"sim", "--preset", "V", "--variant", "2", "--out", dir.string(), "--no-svg"}).code == 0);
  CHECK_FALSE(fs::exists(dir / "plot.svg"));
  const json s = summary(dir);
  CHECK(s["snr"]["whole_signal_db"] == "clean");
  const json& inst = s["instances"][0];
  CHECK(std::abs(inst["mean_err_hz"].get<double>()) <= 1.0);
  CHECK(inst["std_err_hz"].get<double>() <= 1.0);
}

TEST_CASE("sim on the chord seeds three loops") {
  const fs::path dir = scratch("sim_vi");
  REQUIRE(invoke({"sim", "--preset", "VI", "--out", dir.string()}).code == 0);
  for (int k = 0; k < 3; ++k) CHECK(fs::exists(dir / ("trace_" + std::to_string(k) + ".csv")));
  const json s = summary(dir);
  REQUIRE(s["instances"].size() == 3);
  CHECK(s["instances"][0]["fc0_hz"] == 183.6);
  CHECK(s["instances"][1]["fc0_hz"] == 231.3);
  CHECK(s["instances"][2]["fc0_hz"] == 275.1);
  CHECK(s["snr"]["tone_vs_noise_db"].size() == 3);
}

TEST_CASE("sim output is byte-reproducible") {
  const fs::path a = scratch("repro_a"), b = scratch("repro_b");
  REQUIRE(invoke({"sim", "--preset", "IV", "--variant", "2", "--seed", "11", "--out", a.string()}).code == 0);
  REQUIRE(invoke({"sim", "--preset", "IV", "--variant", "2", "--seed", "11", "--out", b.string()}).code == 0);
  for (const char* f : {"trace.csv", "summary.json", "plot.svg"}) {
    CAPTURE(f);
    CHECK(slurp(a / f) == slurp(b / f));
  }
  const fs::path c = scratch("repro_c");
  REQUIRE(invoke({"sim", "--preset", "IV", "--variant", "2", "--seed", "12", "--out", c.string()}).code == 0);
  CHECK(slurp(a / "trace.csv") != slurp(c / "trace.csv"));
}

TEST_CASE("track on an exported signal follows the same data path") {
  const fs::path dir = scratch("track");
  REQUIRE(invoke({"sim", "--preset", "I", "--seed", "3", "--out", (dir / "sim").string(),
               "--export-signal", "--no-svg"}).code == 0);
  REQUIRE(invoke({"track", "--input", (dir / "sim" / "signal.wav").string(), "--fc0", "99.5",
               "--out", (dir / "wav").string()}).code == 0);
  REQUIRE(invoke({"track", "--input", (dir / "sim" / "signal.f32").string(), "--fs", "5000",
               "--fc0", "99.5", "--out", (dir / "raw").string(), "--no-svg"}).code == 0);

  EngineConfig cfg;
  cfg.fc0 = 99.5;
  const AudioData audio = read_wav(dir / "sim" / "signal.wav");
  Engine from_wav(cfg);
  CHECK(slurp(dir / "wav" / "trace.csv") == cli::trace_csv(run_engine(from_wav, audio.samples), 5000.0));
  Engine from_raw(cfg);
  const auto raw = read_raw_f32(dir / "sim" / "signal.f32");
  CHECK(slurp(dir / "raw" / "trace.csv") == cli::trace_csv(run_engine(from_raw, raw), 5000.0));

  // Float32 rounding leaves the start of the trace as in the in-memory run.
  const std::string sim_csv = slurp(dir / "sim" / "trace.csv");
  CHECK(sim_csv.substr(0, 200) == slurp(dir / "raw" / "trace.csv").substr(0, 200));
}

TEST_CASE("track input errors map to exit codes") {
  const fs::path dir = scratch("track_err");
  fs::create_directories(dir);
  std::vector<double> x(500);
  for (std::size_t n = 0; n < x.size(); ++n) x[n] = std::sin(0.1 * n);

  write_wav(dir / "hi.wav", x, 44100, WavEncoding::kPcm16);
  CHECK(invoke({"track", "--input", (dir / "hi.wav").string(), "--out", (dir / "o").string()}).code == 3);

  write_raw_f32(dir / "x.f32", x);
  CHECK(invoke({"track", "--input", (dir / "x.f32").string(), "--out", (dir / "o").string()}).code == 2);
  CHECK(invoke({"track", "--input", (dir / "x.f32").string(), "--fs", "5000", "--out",
             (dir / "o").string()}).code == 0);

  x[100] = std::nan("");
  write_raw_f32(dir / "nan.f32", x);
  CHECK(invoke({"track", "--input", (dir / "nan.f32").string(), "--fs", "5000", "--out",
             (dir / "o").string()}).code == 4);

  std::ofstream(dir / "junk.wav", std::ios::binary) << "RIFF\x04\0\0\0WAVE";
  CHECK(invoke({"track", "--input", (dir / "junk.wav").string(), "--out", (dir / "o").string()}).code == 3);
  CHECK(invoke({"track", "--input", (dir / "missing.wav").string(), "--out", (dir / "o").string()}).code == 3);
}

TEST_CASE("usage and output errors") {
  const fs::path dir = scratch("usage");
  fs::create_directories(dir);
  CHECK(invoke({"sim", "--preset", "IX", "--out", dir.string()}).code == 2);
  CHECK(invoke({"sim", "--preset", "I", "--variant", "9", "--out", dir.string()}).code == 2);
  CHECK(invoke({"sim", "--preset", "I", "--exclude-fraction", "1.5"}).code == 2);
  std::ofstream(dir / "file") << "x";
  CHECK(invoke({"sim", "--preset", "I", "--out", (dir / "file" / "sub").string()}).code == 2);
  CHECK(invoke({"scan", "--out", dir.string()}).code == 2);
  CHECK(invoke({"scan", "--preset", "I", "--f-low", "300", "--f-high", "200", "--out", dir.string()}).code == 2);
}

TEST_CASE("scan on silence") {
  const fs::path dir = scratch("scan_silence");
  fs::create_directories(dir);
  write_raw_f32(dir / "zero.f32", std::vector<double>(2000, 0.0));
  REQUIRE(invoke({"scan", "--input", (dir / "zero.f32").string(), "--fs", "5000", "--out",
               (dir / "o").string()}).code == 0);
  CHECK(persistent_locks(dir / "o") == 0);
  CHECK(fs::exists(dir / "o" / "scan_00.csv"));
}

TEST_SUITE("scan-expectations") {
  TEST_CASE("scan on the step tone finds a single winner") {
    const fs::path dir = scratch("scan_i");
    REQUIRE(invoke({"scan", "--preset", "I", "--f-low", "90", "--f-high", "400", "--out", dir.string()}).code == 0);
    CHECK(persistent_locks(dir) == 1);
  }

  TEST_CASE("scan on the chord finds three locks") {
    const fs::path dir = scratch("scan_vi");
    REQUIRE(invoke({"scan", "--preset", "VI", "--f-low", "90", "--f-high", "400", "--out", dir.string()}).code == 0);
    CHECK(persistent_locks(dir) == 3);
  }
}
