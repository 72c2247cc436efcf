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

// End-to-end anonymization: automaton, epsilon plan, case oversampling and
// time noise, plus the file-level driver behind the command-line tool.

#ifndef DPLOG_PIPELINE_H_
#define DPLOG_PIPELINE_H_

#include <optional>
#include <ostream>
#include <string>

#include "absl/status/statusor.h"
#include "dplog/dafsa.h"
#include "dplog/event_log.h"
#include "dplog/metrics.h"
#include "dplog/oversampler.h"
#include "dplog/risk.h"
#include "dplog/time_anonymizer.h"

namespace dplog {

struct AnonymizationResult {
  NoisedLog noised;
  OversampleResult oversampled;
  EpsilonPlan plan;
  // Everything but runtime_seconds, which the caller measures.
  UtilityReport report;
};

// The count mechanism alone: builds the automaton, draws per-transition
// noise and oversamples cases. Timestamps are left untouched.
absl::StatusOr<OversampleResult> OversampleCases(const EventLog& log,
                                                 const PrivacyConfig& config);

absl::StatusOr<AnonymizationResult> Anonymize(const EventLog& log,
                                              const PrivacyConfig& config,
                                              NoiseOptions options = {});

struct RunConfig {
  std::string input_path;
  // nullopt: detect from the file name or contents.
  std::optional<LogFormat> input_format;
  // nullopt: same as the input.
  std::optional<LogFormat> output_format;
  ColumnMapping columns;
  std::string output_path;
  std::string report_path;
  PrivacyConfig privacy;
  bool monotonic = false;

  absl::Status Validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitConfigError = 2;

// Reads, anonymizes and writes. Returns a process exit code; diagnostics go
// to `err`.
int Run(const RunConfig& config, std::ostream& err);

}  // namespace dplog

#endif  // DPLOG_PIPELINE_H_
