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

#include "dplog/pipeline.h"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dplog/log_io.h"

namespace dplog {
namespace {

struct CountStage {
  Dafsa dafsa;
  StateAnnotatedLog annotated;
  OversampleResult oversampled;
};

absl::StatusOr<CountStage> RunCountStage(const EventLog& log,
                                         const PrivacyConfig& config,
                                         double count_epsilon) {
  absl::StatusOr<Dafsa> dafsa = Dafsa::Build(DistinctVariants(log));
  if (!dafsa.ok()) return dafsa.status();
  absl::StatusOr<StateAnnotatedLog> annotated = Annotate(log, *dafsa);
  if (!annotated.ok()) return annotated.status();
  const ContingencyTable counts =
      Contingency(*annotated, dafsa->num_transitions());
  const TransitionVariantLookup lookup = BuildLookup(*annotated, *dafsa);
  OversamplePlan plan = DrawNeededNoise(*dafsa, count_epsilon, config.seed);
  OversampleResult over =
      Oversample(log, lookup, counts, std::move(plan), config.seed);
  return CountStage{*std::move(dafsa), *std::move(annotated),
                    std::move(over)};
}

}  // namespace

absl::StatusOr<OversampleResult> OversampleCases(const EventLog& log,
                                                 const PrivacyConfig& config) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  absl::StatusOr<double> eps = CountEpsilon(config);
  if (!eps.ok()) return eps.status();
  absl::StatusOr<CountStage> stage = RunCountStage(log, config, *eps);
  if (!stage.ok()) return stage.status();
  return std::move(stage->oversampled);
}

absl::StatusOr<AnonymizationResult> Anonymize(const EventLog& log,
                                              const PrivacyConfig& config,
                                              NoiseOptions options) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  if (log.traces.empty()) {
    return absl::InvalidArgumentError("input log has no cases");
  }
  absl::StatusOr<double> count_eps = CountEpsilon(config);
  if (!count_eps.ok()) return count_eps.status();
  absl::StatusOr<CountStage> stage = RunCountStage(log, config, *count_eps);
  if (!stage.ok()) return stage.status();

  const RelativeTimeView times = RelativeTimes(log, config.time_unit);
  absl::StatusOr<EpsilonPlan> plan =
      TimeEpsilons(stage->annotated, times, config);
  if (!plan.ok()) return plan.status();

  AnonymizationResult result;
  result.oversampled = std::move(stage->oversampled);
  const OversampleResult& over = result.oversampled;
  const EpsilonPlan output_plan =
      AdjustEpsilons(plan->Select(over.source), over.group_size);
  const RelativeTimeView output_times =
      RelativeTimesWithScale(over.log, config.time_unit, times.r_max);
  result.noised = InjectTimeNoise(over.log, output_times, output_plan,
                                  config.seed, options);

  // Each output event is scored against the true time of its source event.
  std::vector<std::vector<double>> truth;
  truth.reserve(over.source.size());
  for (size_t s : over.source) truth.push_back(times.rel_time[s]);
  const RelativeTimeView published =
      RelativeTimesWithScale(result.noised.log, config.time_unit, times.r_max);

  UtilityReport& report = result.report;
  absl::StatusOr<double> smape = SmapePercent(truth, published.rel_time);
  if (!smape.ok()) return smape.status();
  report.smape_percent = *smape;
  absl::StatusOr<double> ratio = OversamplingRatio(log, result.noised.log);
  if (!ratio.ok()) return ratio.status();
  report.oversampling_ratio = *ratio;
  report.variant_set_preserved = VariantSetEqual(log, result.noised.log);
  report.residual_risk =
      ComputeResidualRisk(*count_eps, stage->dafsa.num_transitions());
  report.epsilon_summary = SummarizeEpsilons(result.noised.applied_epsilon);
  report.delta = config.delta;
  report.precision = config.precision;
  report.time_unit = config.time_unit;
  report.seed = config.seed;
  report.original_cases = log.traces.size();
  report.anonymized_cases = result.noised.log.traces.size();
  report.original_events = log.EventCount();
  report.anonymized_events = result.noised.log.EventCount();
  report.dafsa_states = stage->dafsa.num_states();
  report.dafsa_transitions = stage->dafsa.num_transitions();
  result.plan = *std::move(plan);
  return result;
}

absl::Status RunConfig::Validate() const {
  if (absl::Status s = privacy.Validate(); !s.ok()) return s;
  if (input_path.empty()) return absl::InvalidArgumentError("input: missing");
  if (output_path.empty()) {
    return absl::InvalidArgumentError("output: missing");
  }
  if (report_path.empty()) {
    return absl::InvalidArgumentError("report: missing");
  }
  std::error_code ec;
  if (std::filesystem::exists(output_path, ec) &&
      std::filesystem::equivalent(input_path, output_path, ec)) {
    return absl::InvalidArgumentError(
        "output: refusing to overwrite the input log");
  }
  if (columns.case_column.empty() || columns.activity_column.empty() ||
      columns.timestamp_column.empty()) {
    return absl::InvalidArgumentError("columns: names must be non-empty");
  }
  return absl::OkStatus();
}

namespace {

absl::Status WriteFile(const std::string& path, absl::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot open ", path));
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("failed writing ", path));
  return absl::OkStatus();
}

}  // namespace

int Run(const RunConfig& config, std::ostream& err) {
  if (absl::Status s = config.Validate(); !s.ok()) {
    err << "invalid configuration: " << s.message() << "\n";
    return kExitConfigError;
  }
  const auto started = std::chrono::steady_clock::now();

  absl::StatusOr<std::string> contents = ReadFileContents(config.input_path);
  if (!contents.ok()) {
    err << contents.status().message() << "\n";
    return kExitInputError;
  }
  const LogFormat format = config.input_format.value_or(
      DetectFormat(config.input_path, *contents));
  absl::StatusOr<EventLog> log = format == LogFormat::kXes
                                     ? ParseXes(*contents)
                                     : ParseCsv(*contents, config.columns);
  if (!log.ok()) {
    err << config.input_path << ": " << log.status().message() << "\n";
    return kExitInputError;
  }

  absl::StatusOr<AnonymizationResult> result =
      Anonymize(*log, config.privacy, NoiseOptions{config.monotonic});
  if (!result.ok()) {
    err << "anonymization failed: " << result.status().message() << "\n";
    return kExitInputError;
  }

  const std::string bytes = WriteLogToString(
      result->noised.log, config.output_format.value_or(format));
  if (absl::Status s = WriteFile(config.output_path, bytes); !s.ok()) {
    err << s.message() << "\n";
    return kExitInputError;
  }

  result->report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  const std::string report = ToJson(result->report).dump(2) + "\n";
  if (absl::Status s = WriteFile(config.report_path, report); !s.ok()) {
    err << s.message() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace dplog
