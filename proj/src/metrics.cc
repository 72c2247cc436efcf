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

#include "dplog/metrics.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dplog {

absl::StatusOr<double> SmapePercent(
    const std::vector<std::vector<double>>& truth,
    const std::vector<std::vector<double>>& anonymized) {
  if (truth.size() != anonymized.size()) {
    return absl::InvalidArgumentError("SMAPE inputs differ in trace count");
  }
  double sum = 0;
  size_t n = 0;
  for (size_t i = 0; i < truth.size(); ++i) {
    if (truth[i].size() != anonymized[i].size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("SMAPE inputs differ in length at trace ", i));
    }
    for (size_t k = 0; k < truth[i].size(); ++k) {
      const double t = truth[i][k];
      const double a = anonymized[i][k];
      const double denom = std::abs(t) + std::abs(a);
      if (denom > 0) sum += std::abs(t - a) / denom;
      ++n;
    }
  }
  if (n == 0) return absl::InvalidArgumentError("SMAPE of an empty pairing");
  return 100.0 * sum / static_cast<double>(n);
}

absl::StatusOr<double> OversamplingRatio(const EventLog& original,
                                         const EventLog& anonymized) {
  if (original.traces.empty()) {
    return absl::InvalidArgumentError("oversampling ratio of an empty log");
  }
  return static_cast<double>(anonymized.traces.size()) /
         static_cast<double>(original.traces.size());
}

namespace {

std::set<std::vector<std::string>> VariantSet(const EventLog& log) {
  std::set<std::vector<std::string>> out;
  for (const Trace& t : log.traces) out.insert(t.Variant());
  return out;
}

}  // namespace

bool VariantSetEqual(const EventLog& a, const EventLog& b) {
  return VariantSet(a) == VariantSet(b);
}

EpsilonSummary SummarizeEpsilons(
    const std::vector<std::vector<Epsilon>>& epsilons) {
  EpsilonSummary summary;
  std::vector<double> finite;
  for (const auto& trace : epsilons) {
    for (const Epsilon& e : trace) {
      if (e.no_noise()) {
        ++summary.no_noise_events;
      } else {
        finite.push_back(e.value());
      }
    }
  }
  summary.finite_events = finite.size();
  if (finite.empty()) return summary;
  std::sort(finite.begin(), finite.end());
  summary.min = finite.front();
  summary.max = finite.back();
  const size_t mid = finite.size() / 2;
  summary.median = finite.size() % 2 == 1
                       ? finite[mid]
                       : 0.5 * (finite[mid - 1] + finite[mid]);
  return summary;
}

nlohmann::ordered_json ToJson(const UtilityReport& report) {
  const double extra = report.residual_risk.extra_prob.empty()
                           ? 0.0
                           : report.residual_risk.extra_prob.front();
  nlohmann::ordered_json j;
  j["smape_percent"] = report.smape_percent;
  j["oversampling_ratio"] = report.oversampling_ratio;
  j["variant_set_preserved"] = report.variant_set_preserved;
  j["residual_risk"] = {
      {"count_epsilon", report.residual_risk.count_epsilon},
      {"sensitivity", kCountSensitivity},
      {"extra_probability_per_transition", extra},
      {"transitions", report.residual_risk.extra_prob.size()},
  };
  j["epsilon_summary"] = {
      {"min", report.epsilon_summary.min},
      {"median", report.epsilon_summary.median},
      {"max", report.epsilon_summary.max},
      {"finite_events", report.epsilon_summary.finite_events},
      {"no_noise_events", report.epsilon_summary.no_noise_events},
  };
  j["runtime_seconds"] = report.runtime_seconds;
  j["parameters"] = {
      {"delta", report.delta},
      {"precision", report.precision},
      {"time_unit", std::string(TimeUnitName(report.time_unit))},
      {"seed", report.seed},
  };
  j["log"] = {
      {"original_cases", report.original_cases},
      {"anonymized_cases", report.anonymized_cases},
      {"original_events", report.original_events},
      {"anonymized_events", report.anonymized_events},
      {"dafsa_states", report.dafsa_states},
      {"dafsa_transitions", report.dafsa_transitions},
  };
  return j;
}

}  // namespace dplog
