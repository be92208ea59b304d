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

#include "pmhll/cli/commands.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <system_error>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pmhll/bank/bank.h"
#include "pmhll/cli/outputs.h"
#include "pmhll/cli/presets.h"
#include "pmhll/cli/scan.h"
#include "pmhll/cli/simulation.h"
#include "pmhll/cli/svg_plot.h"
#include "pmhll/core/engine.h"
#include "pmhll/errors.h"
#include "pmhll/signals/audio_io.h"

namespace pmhll::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Raised for problems with the --out directory.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file readable but at the wrong rate for the engine.
class RateMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void prepare_out_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw OutputError("cannot create output directory " + dir.string());
  }
}

void emit(const fs::path& path, const std::string& text) {
  try {
    write_text(path, text);
  } catch (const std::runtime_error& e) {
    throw OutputError(e.what());
  }
}

void check_finite(const std::vector<double>& x, const std::string& what) {
  for (std::size_t n = 0; n < x.size(); ++n) {
    if (!std::isfinite(x[n])) {
      throw InputError(fmt::format("{}: non-finite sample at index {}", what, n));
    }
  }
}

std::vector<double> relative(const std::vector<double>& v, double ref) {
  std::vector<double> out(v.size());
  for (std::size_t n = 0; n < v.size(); ++n) out[n] = v[n] - ref;
  return out;
}

struct InputSignal {
  std::vector<double> samples;
  double fs;
};

// WAV (detected by its RIFF header) or headerless float32. The engine rate is
// --fs when given, otherwise `default_fs`; WAV files must match it.
InputSignal load_input(const fs::path& path, std::optional<double> fs_flag,
                       double default_fs) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) {
    throw AudioFormatError(AudioErrorKind::kIo, "cannot open " + path.string());
  }
  char magic[4] = {};
  probe.read(magic, 4);
  const bool is_wav = probe.gcount() == 4 && std::string(magic, 4) == "RIFF";
  probe.close();

  if (is_wav) {
    AudioData audio = read_wav(path);
    const double engine_fs = fs_flag.value_or(default_fs);
    if (audio.sample_rate != engine_fs) {
      throw RateMismatch(fmt::format(
          "{}: sample rate {} Hz does not match engine rate {} Hz (no resampling)",
          path.string(), audio.sample_rate, engine_fs));
    }
    return {std::move(audio.samples), engine_fs};
  }
  if (!fs_flag) {
    throw UsageError(path.string() + ": raw float32 input requires --fs");
  }
  return {read_raw_f32(path), *fs_flag};
}

void list_presets(std::ostream& out) {
  for (const Preset& p : presets()) {
    out << p.id << "  " << p.description << "\n";
    for (std::size_t v = 0; v < p.variants.size(); ++v) {
      out << "    --variant " << v << "  " << p.variants[v].label;
      out << "  fc0 =";
      for (double f : p.fc0) out << " " << f;
      out << " Hz\n";
    }
  }
}

struct SimArgs {
  std::string preset = "I";
  int variant = 0;
  std::uint64_t seed = 1;
  std::string out = "out";
  double fs = 5000.0;
  double exclude_fraction = 0.1;
  bool svg = true;
  bool export_signal = false;
};

void run_sim(const SimArgs& a, std::ostream& out) {
  SimulationRequest req;
  req.preset = a.preset;
  req.variant = a.variant;
  req.seed = a.seed;
  req.exclude_fraction = a.exclude_fraction;
  req.engine.fs = a.fs;
  const SimulationResult result = run_simulation(req);

  const fs::path dir(a.out);
  prepare_out_dir(dir);
  const bool multi = result.instances.size() > 1;
  for (std::size_t k = 0; k < result.instances.size(); ++k) {
    const std::string name = multi ? fmt::format("trace_{}.csv", k) : "trace.csv";
    emit(dir / name, trace_csv(result.instances[k].trace, a.fs));
  }
  const json summary = summary_json(result);
  emit(dir / "summary.json", summary.dump(2) + "\n");

  if (a.svg) {
    Plot plot;
    plot.fs = a.fs;
    plot.title = fmt::format("preset {} ({}), seed {}", result.preset->id,
                             result.variant->label, a.seed);
    plot.right_label = multi ? "fc - f0 / Hz" : "fc - 96 Hz";
    for (const InstanceResult& inst : result.instances) {
      const double ref = multi ? inst.f0.front() : 96.0;
      plot.instances.push_back({inst.trace.hnr_db, relative(inst.trace.fc_hz, ref),
                                relative(inst.f0, ref), inst.trace.strobe});
    }
    emit(dir / "plot.svg", render_svg(plot));
  }
  if (a.export_signal) {
    double peak = 0.0;
    for (double v : result.signal) peak = std::max(peak, std::abs(v));
    const double scale = peak > 0.0 ? 0.99 / peak : 1.0;
    try {
      write_raw_f32(dir / "signal.f32", result.signal);
      write_wav(dir / "signal.wav", result.signal, static_cast<int>(a.fs),
                WavEncoding::kPcm16, scale);
    } catch (const AudioFormatError& e) {
      throw OutputError(e.what());
    }
    out << fmt::format("signal.wav is 16-bit PCM scaled by {:.6g}\n", scale);
  }

  for (std::size_t k = 0; k < result.instances.size(); ++k) {
    const TrackingReport& r = result.instances[k].report;
    out << fmt::format("instance {}: fc0 {:.1f} Hz  mean {:+.3f} Hz  std {:.3f} Hz  "
                       "mean HNR {:.1f} dB\n",
                       k, result.instances[k].config.fc0, r.error->mean,
                       r.error->std, r.mean_hnr_db);
  }
  if (result.snr.whole_signal_db) {
    out << fmt::format("realized SNR {:.2f} dB\n", *result.snr.whole_signal_db);
  }
  out << "wrote " << dir.string() << "\n";
}

struct TrackArgs {
  std::string input;
  std::optional<double> fs;
  double fc0 = 100.0;
  double fc_min = 96.0;
  std::string out = "out";
  double exclude_fraction = 0.1;
  bool svg = true;
};

void run_track(const TrackArgs& a, std::ostream& out) {
  const InputSignal in = load_input(a.input, a.fs, 5000.0);
  check_finite(in.samples, a.input);

  EngineConfig config;
  config.fs = in.fs;
  config.fc0 = a.fc0;
  config.fc_min = std::min(a.fc_min, a.fc0);
  Engine engine(config);
  const Trace trace = run_engine(engine, in.samples);

  ReportOptions options;
  options.exclude_fraction = a.exclude_fraction;
  const TrackingReport report = make_report(trace, in.fs, options);

  const fs::path dir(a.out);
  prepare_out_dir(dir);
  emit(dir / "trace.csv", trace_csv(trace, in.fs));
  json manifest = {{"tool", "pmhll"},
                   {"version", tool_version()},
                   {"input", a.input},
                   {"samples", in.samples.size()},
                   {"engines", json::array({to_json(config)})}};
  json summary = {{"manifest", std::move(manifest)},
                  {"instances", json::array({to_json(report)})}};
  emit(dir / "summary.json", summary.dump(2) + "\n");
  if (a.svg) {
    Plot plot;
    plot.fs = in.fs;
    plot.title = "track " + fs::path(a.input).filename().string();
    plot.right_label = fmt::format("fc - {} Hz", a.fc0);
    plot.instances.push_back(
        {trace.hnr_db, relative(trace.fc_hz, a.fc0), {}, trace.strobe});
    emit(dir / "plot.svg", render_svg(plot));
  }
  out << fmt::format("{} samples at {} Hz, lock fraction {:.2f}, mean HNR {:.1f} dB\n",
                     in.samples.size(), in.fs, report.lock_fraction,
                     report.mean_hnr_db);
  out << "wrote " << dir.string() << "\n";
}

struct ScanArgs {
  std::string input;
  std::string preset;
  int variant = 0;
  std::uint64_t seed = 1;
  std::optional<double> fs;
  double f_low = 90.0;
  double f_high = 400.0;
  double spacing = std::exp2(1.0 / 12.0);
  bool no_confine = false;
  double exclude_fraction = 0.1;
  std::string out = "out";
};

void run_scan_command(const ScanArgs& a, std::ostream& out) {
  if (a.input.empty() == a.preset.empty()) {
    throw UsageError("scan needs exactly one of --input or --preset");
  }
  InputSignal in;
  if (!a.input.empty()) {
    in = load_input(a.input, a.fs, 5000.0);
  } else {
    const double fs = a.fs.value_or(5000.0);
    in = {synthesize_preset(find_preset(a.preset), a.variant, a.seed, fs).signal, fs};
  }
  check_finite(in.samples, a.input.empty() ? a.preset : a.input);

  BankConfig config;
  config.f_low = a.f_low;
  config.f_high = a.f_high;
  config.spacing = a.spacing;
  config.confine = !a.no_confine;
  config.instance.fs = in.fs;
  config.instance.fc_min = a.f_low;
  ScanOptions options;
  options.exclude_fraction = a.exclude_fraction;
  const ScanResult result = run_scan(in.samples, config, options);

  const fs::path dir(a.out);
  prepare_out_dir(dir);
  for (std::size_t k = 0; k < result.traces.size(); ++k) {
    emit(dir / fmt::format("scan_{:02}.csv", k), trace_csv(result.traces[k], in.fs));
  }
  emit(dir / "scan_summary.csv", scan_summary_csv(result));
  out << fmt::format("{} instances, {} persistent lock(s)\n", result.instances.size(),
                     result.persistent_count());
  for (std::size_t k = 0; k < result.instances.size(); ++k) {
    const ScanInstance& i = result.instances[k];
    if (!i.persistent) continue;
    out << fmt::format("  instance {:2}: seed {:.2f} Hz  final fc {:.2f} Hz  "
                       "lock {:.2f}  mean HNR {:.1f} dB\n",
                       k, i.fc0_hz, i.final_fc_hz, i.lock_fraction, i.mean_hnr_db);
  }
  out << "wrote " << dir.string() << "\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Harmonic locked-loop f0 / HNR tracker"};
  app.require_subcommand(1);

  SimArgs sim;
  CLI::App* sim_cmd = app.add_subcommand("sim", "run a built-in test signal preset");
  sim_cmd->add_option("--preset", sim.preset, "preset id I..VI")->required();
  sim_cmd->add_option("--variant", sim.variant, "variant index (see list-presets)");
  sim_cmd->add_option("--seed", sim.seed, "RNG seed for phases and noise");
  sim_cmd->add_option("--out", sim.out, "output directory");
  sim_cmd->add_option("--fs", sim.fs, "sampling frequency, Hz")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--exclude-fraction", sim.exclude_fraction,
                      "leading fraction excluded from statistics")
      ->check(CLI::Range(0.0, 0.99));
  sim_cmd->add_flag("--svg,!--no-svg", sim.svg, "write plot.svg");
  sim_cmd->add_flag("--export-signal", sim.export_signal,
                    "also write the input as raw float32 signal.f32 and 16-bit signal.wav");

  TrackArgs track;
  CLI::App* track_cmd = app.add_subcommand("track", "track f0 in a mono audio file");
  track_cmd->add_option("--input", track.input, "WAV or raw float32 file")->required();
  track_cmd->add_option("--fs", track.fs, "engine / raw sampling frequency, Hz")
      ->check(CLI::PositiveNumber);
  track_cmd->add_option("--fc0", track.fc0, "initial oscillator frequency, Hz")
      ->check(CLI::PositiveNumber);
  track_cmd->add_option("--fc-min", track.fc_min, "lower frequency clamp, Hz")
      ->check(CLI::PositiveNumber);
  track_cmd->add_option("--out", track.out, "output directory");
  track_cmd->add_option("--exclude-fraction", track.exclude_fraction)
      ->check(CLI::Range(0.0, 0.99));
  track_cmd->add_flag("--svg,!--no-svg", track.svg, "write plot.svg");

  ScanArgs scan;
  CLI::App* scan_cmd = app.add_subcommand("scan", "run a bank of loops over a band");
  scan_cmd->add_option("--input", scan.input, "WAV or raw float32 file");
  scan_cmd->add_option("--preset", scan.preset, "preset id I..VI");
  scan_cmd->add_option("--variant", scan.variant);
  scan_cmd->add_option("--seed", scan.seed);
  scan_cmd->add_option("--fs", scan.fs)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--f-low", scan.f_low, "lowest instance seed, Hz")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--f-high", scan.f_high, "highest instance seed, Hz")
      ->check(CLI::PositiveNumber);
  scan_cmd->add_option("--spacing", scan.spacing, "seed frequency ratio (> 1)");
  scan_cmd->add_flag("--no-confine", scan.no_confine,
                     "let instances leave their own cell");
  scan_cmd->add_option("--exclude-fraction", scan.exclude_fraction)
      ->check(CLI::Range(0.0, 0.99));
  scan_cmd->add_option("--out", scan.out, "output directory");

  app.add_subcommand("list-presets", "show the built-in simulation presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (sim_cmd->parsed()) {
      run_sim(sim, out);
    } else if (track_cmd->parsed()) {
      run_track(track, out);
    } else if (scan_cmd->parsed()) {
      run_scan_command(scan, out);
    } else {
      list_presets(out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutputError& e) {
    err << "output error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RateMismatch& e) {
    err << "sample-rate mismatch: " << e.what() << "\n";
    return kExitInputFormat;
  } catch (const AudioFormatError& e) {
    const char* label = "malformed input";
    switch (e.kind()) {
      case AudioErrorKind::kIo: label = "cannot read input"; break;
      case AudioErrorKind::kMalformed: label = "malformed header"; break;
      case AudioErrorKind::kUnsupportedEncoding: label = "unsupported encoding"; break;
      case AudioErrorKind::kNotMono: label = "not mono"; break;
    }
    err << label << ": " << e.what() << "\n";
    return kExitInputFormat;
  } catch (const InputError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace pmhll::cli
