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

#ifndef DPLOG_METRICS_H_
#define DPLOG_METRICS_H_

#include <vector>

#include "absl/status/statusor.h"
#include "dplog/event_log.h"
#include "dplog/risk.h"
#include "json.hpp"

namespace dplog {

// Mean of |t - a| / (|t| + |a|) over paired values, in percent. A pair of
// zeros contributes 0.
absl::StatusOr<double> SmapePercent(
    const std::vector<std::vector<double>>& truth,
    const std::vector<std::vector<double>>& anonymized);

// Anonymized case count over original case count.
absl::StatusOr<double> OversamplingRatio(const EventLog& original,
                                         const EventLog& anonymized);

// True iff both logs have the same set of distinct activity sequences.
bool VariantSetEqual(const EventLog& a, const EventLog& b);

struct EpsilonSummary {
  double min = 0;
  double median = 0;
  double max = 0;
  size_t finite_events = 0;
  size_t no_noise_events = 0;
};

EpsilonSummary SummarizeEpsilons(
    const std::vector<std::vector<Epsilon>>& epsilons);

struct UtilityReport {
  double smape_percent = 0;
  double oversampling_ratio = 1;
  bool variant_set_preserved = false;
  ResidualRisk residual_risk;
  EpsilonSummary epsilon_summary;
  double runtime_seconds = 0;

  // Run context, not metrics.
  double delta = 0;
  double precision = 0;
  TimeUnit time_unit = TimeUnit::kHours;
  uint64_t seed = 0;
  size_t original_cases = 0;
  size_t anonymized_cases = 0;
  size_t original_events = 0;
  size_t anonymized_events = 0;
  int dafsa_states = 0;
  int dafsa_transitions = 0;
};

nlohmann::ordered_json ToJson(const UtilityReport& report);

}  // namespace dplog

#endif  // DPLOG_METRICS_H_
