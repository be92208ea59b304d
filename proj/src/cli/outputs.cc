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

#include "pmhll/cli/outputs.h"

#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

namespace pmhll::cli {

using nlohmann::json;

std::string trace_csv(const Trace& trace, double fs) {
  std::string out = kTraceCsvHeader;
  out += '\n';
  for (std::size_t n = 0; n < trace.size(); ++n) {
    fmt::format_to(std::back_inserter(out), "{:.9g},{:.9g},{:.9g},{:.9g},{},{}\n",
                   static_cast<double>(n) / fs, trace.fc_hz[n], trace.hnr_db[n],
                   trace.cs[n], trace.strobe[n] ? 1 : 0,
                   trace.locked[n] ? 1 : 0);
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_trace_csv(const std::filesystem::path& path, const Trace& trace,
                     double fs) {
  write_text(path, trace_csv(trace, fs));
}

void write_json(const std::filesystem::path& path, const json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

json to_json(const EngineConfig& c) {
  return {{"fs", c.fs},
          {"fc0", c.fc0},
          {"fc_min", c.fc_min},
          {"fc_max", c.upper_frequency()},
          {"np", c.np},
          {"tau_si_mult", c.tau_si_mult},
          {"tau_hnr_mult", c.tau_hnr_mult},
          {"tau_hnr_post_mult", c.tau_hnr_post_mult},
          {"tau_cs_mult", c.tau_cs_mult},
          {"adapt_periods", c.adapt_periods}};
}

json to_json(const TrackingReport& r) {
  json j;
  if (r.error) {
    j["mean_err_hz"] = r.error->mean;
    j["std_err_hz"] = r.error->std;
    j["samples_evaluated"] = r.error->count;
  }
  j["exclude_fraction"] = r.exclude_fraction;
  if (r.error) {
    j["convergence_time_s"] =
        r.convergence_time_s ? json(*r.convergence_time_s) : json("none");
  }
  json intervals = json::array();
  for (const Interval& i : r.lock_intervals) intervals.push_back({i.start_s, i.end_s});
  j["lock_intervals"] = std::move(intervals);
  j["mean_hnr_db"] = r.mean_hnr_db;
  j["lock_fraction"] = r.lock_fraction;
  return j;
}

namespace {

const char* family_name(SignalFamily f) {
  switch (f) {
    case SignalFamily::kHarmonic:
      return "harmonic";
    case SignalFamily::kIrn:
      return "irn";
    case SignalFamily::kChord:
      return "chord";
  }
  return "unknown";
}

}  // namespace

json manifest_json(const SimulationResult& result) {
  const Preset& p = *result.preset;
  const PresetVariant& v = *result.variant;
  json signal = {{"family", family_name(p.family)},
                 {"duration_s", p.duration_s},
                 {"noise_gain", v.noise_gain}};
  if (p.family != SignalFamily::kIrn) {
    json parts = json::array();
    for (const Partial& part : p.harmonics.partials) {
      parts.push_back({{"n", part.number}, {"amplitude", part.amplitude}});
    }
    signal["partials"] = std::move(parts);
    signal["phases"] = "uniform random from seed";
  }
  switch (p.family) {
    case SignalFamily::kHarmonic:
      signal["mistune_hz"] = v.mistune_hz;
      signal["f0_track"] = {{"kind", p.track.describe()},
                            {"first_hz", p.track.first()},
                            {"second_hz", p.track.second()},
                            {"duration_s", p.track.duration()}};
      break;
    case SignalFamily::kIrn:
      signal["irn"] = {{"delay_s", 1.0 / p.irn_f0_hz},
                       {"iterations", v.irn_iterations},
                       {"source_duration_s", 4.0}};
      break;
    case SignalFamily::kChord:
      signal["chord"] = {{"base_hz", p.chord_base_hz},
                         {"semitone_offsets", p.chord_offsets}};
      break;
  }

  json engines = json::array();
  for (const InstanceResult& inst : result.instances) engines.push_back(to_json(inst.config));

  return {{"tool", "pmhll"},
          {"version", tool_version()},
          {"preset", p.id},
          {"variant", result.request.variant},
          {"variant_label", v.label},
          {"seed", result.request.seed},
          {"exclude_fraction", result.request.exclude_fraction},
          {"signal", std::move(signal)},
          {"engines", std::move(engines)}};
}

json summary_json(const SimulationResult& result) {
  json snr;
  if (result.snr.whole_signal_db) {
    snr["whole_signal_db"] = *result.snr.whole_signal_db;
  } else {
    snr["whole_signal_db"] = "clean";
  }
  if (!result.snr.tone_vs_noise_db.empty()) {
    snr["tone_vs_noise_db"] = result.snr.tone_vs_noise_db;
    snr["tone_vs_noise_and_others_db"] = result.snr.tone_vs_noise_and_others_db;
  }

  json instances = json::array();
  for (std::size_t k = 0; k < result.instances.size(); ++k) {
    const InstanceResult& inst = result.instances[k];
    json j = to_json(inst.report);
    j["fc0_hz"] = inst.config.fc0;
    if (k < result.variant->reference_error.size()) {
      j["reference_mean_err_hz"] = result.variant->reference_error[k].mean;
      j["reference_std_err_hz"] = result.variant->reference_error[k].std;
    }
    instances.push_back(std::move(j));
  }

  return {{"manifest", manifest_json(result)},
          {"seed", result.request.seed},
          {"snr", std::move(snr)},
          {"instances", std::move(instances)}};
}

}  // namespace pmhll::cli
