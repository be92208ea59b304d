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

#ifndef PMHLL_CORE_TRACE_H_
#define PMHLL_CORE_TRACE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "pmhll/core/engine.h"

namespace pmhll {

// Column-wise record of TickOutput values for a whole run.
struct Trace {
  std::vector<double> fc_hz;
  std::vector<double> hnr_db;
  std::vector<double> cs;
  std::vector<bool> strobe;
  std::vector<bool> locked;

  void reserve(std::size_t n) {
    fc_hz.reserve(n);
    hnr_db.reserve(n);
    cs.reserve(n);
    strobe.reserve(n);
    locked.reserve(n);
  }

  void append(const TickOutput& out) {
    fc_hz.push_back(out.fc_hz);
    hnr_db.push_back(out.hnr_db);
    cs.push_back(out.cs);
    strobe.push_back(out.strobe);
    locked.push_back(out.locked);
  }

  std::size_t size() const { return fc_hz.size(); }
};

inline Trace run_engine(Engine& engine, std::span<const double> signal) {
  Trace trace;
  trace.reserve(signal.size());
  for (double x : signal) trace.append(engine.tick(x));
  return trace;
}

}  // namespace pmhll

#endif  // PMHLL_CORE_TRACE_H_
