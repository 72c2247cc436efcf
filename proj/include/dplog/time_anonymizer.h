//
// Copyright 2026 The dplog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DPLOG_TIME_ANONYMIZER_H_
#define DPLOG_TIME_ANONYMIZER_H_

#include <cstdint>
#include <vector>

#include "absl/types/span.h"
#include "dplog/event_log.h"
#include "dplog/risk.h"

namespace dplog {

// Divides every event epsilon of trace i by group_size[i]. Copies of one
// case release correlated times, so they share that case's budget.
EpsilonPlan AdjustEpsilons(const EpsilonPlan& plan,
                           absl::Span<const int> group_size);

struct NoiseOptions {
  // Raise each event's time to at least its predecessor's.
  bool monotonic = false;
};

struct NoisedLog {
  EventLog log;
  // [trace][event]: epsilon used, and the signed change of the relative time
  // in the log's time unit (after clamping).
  std::vector<std::vector<Epsilon>> applied_epsilon;
  std::vector<std::vector<double>> noise_magnitude;
  // Relative times after noise, in the view's unit.
  std::vector<std::vector<double>> rel_time;
};

// Adds Lap(1 / epsilon) to each normalized relative time, rescales by
// times.r_max and rebuilds timestamps from the unchanged case start. The
// first event of a trace stays at the case start, negative times clamp to
// zero and event order within a trace is kept. Trace i draws from its own
// substream of `seed`.
NoisedLog InjectTimeNoise(const EventLog& log, const RelativeTimeView& times,
                          const EpsilonPlan& plan, uint64_t seed,
                          NoiseOptions options = {});

}  // namespace dplog

#endif  // DPLOG_TIME_ANONYMIZER_H_
