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

// dplog: anonymize a process event log under a guessing-advantage bound.
//
//   dplog anonymize --input log.xes --output anon.xes --report report.json \
//       --delta 0.2 --precision 0.1 --seed 42
//   dplog dafsa --input log.csv --dot dafsa.dot

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/strings/str_split.h"
#include "dplog/dafsa.h"
#include "dplog/log_io.h"
#include "dplog/pipeline.h"

namespace {

std::optional<dplog::LogFormat> FormatFromFlag(const std::string& flag) {
  if (flag == "xes") return dplog::LogFormat::kXes;
  if (flag == "csv") return dplog::LogFormat::kCsv;
  return std::nullopt;
}

int RunDafsa(const std::string& input, const std::string& format_flag,
             const dplog::ColumnMapping& columns, const std::string& dot) {
  absl::StatusOr<std::string> contents = dplog::ReadFileContents(input);
  if (!contents.ok()) {
    std::cerr << contents.status().message() << "\n";
    return dplog::kExitInputError;
  }
  const dplog::LogFormat format = FormatFromFlag(format_flag).value_or(
      dplog::DetectFormat(input, *contents));
  absl::StatusOr<dplog::EventLog> log =
      format == dplog::LogFormat::kXes ? dplog::ParseXes(*contents)
                                       : dplog::ParseCsv(*contents, columns);
  if (!log.ok()) {
    std::cerr << input << ": " << log.status().message() << "\n";
    return dplog::kExitInputError;
  }
  absl::StatusOr<dplog::Dafsa> dafsa =
      dplog::Dafsa::Build(dplog::DistinctVariants(*log));
  if (!dafsa.ok()) {
    std::cerr << dafsa.status().message() << "\n";
    return dplog::kExitInputError;
  }
  absl::StatusOr<dplog::StateAnnotatedLog> annotated =
      dplog::Annotate(*log, *dafsa);
  if (!annotated.ok()) {
    std::cerr << annotated.status().message() << "\n";
    return dplog::kExitInputError;
  }
  const dplog::ContingencyTable counts =
      dplog::Contingency(*annotated, dafsa->num_transitions());
  std::cout << "states=" << dafsa->num_states()
            << " transitions=" << dafsa->num_transitions()
            << " cases=" << log->traces.size()
            << " events=" << log->EventCount() << "\n";
  std::cout << "source,activity,target,count\n";
  for (dplog::TransitionId t = 0; t < dafsa->num_transitions(); ++t) {
    const dplog::Transition& tr = dafsa->transition(t);
    std::cout << "s" << tr.source << "," << tr.label << ",s" << tr.target
              << "," << counts.count(t) << "\n";
  }
  if (!dot.empty()) {
    std::ofstream out(dot);
    out << dafsa->ToDot();
    if (!out) {
      std::cerr << "failed writing " << dot << "\n";
      return dplog::kExitInputError;
    }
  }
  return dplog::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private anonymization of process event logs"};
  app.require_subcommand(1);

  dplog::RunConfig config;
  std::string input_format = "auto";
  std::string output_format = "same";
  std::string columns = "case,activity,timestamp";
  std::string time_unit = "hours";

  CLI::App* anonymize =
      app.add_subcommand("anonymize", "Oversample cases and noise timestamps");
  anonymize->add_option("-i,--input", config.input_path, "Input log (XES/CSV)")
      ->required();
  anonymize->add_option("-o,--output", config.output_path, "Anonymized log")
      ->required();
  anonymize->add_option("-r,--report", config.report_path, "JSON report")
      ->required();
  anonymize->add_option("--delta", config.privacy.delta,
                        "Maximum guessing advantage, in (0, 1)")
      ->required();
  anonymize->add_option("--precision", config.privacy.precision,
                        "Guess precision on the normalized scale, in (0, 1]")
      ->capture_default_str();
  anonymize->add_option("--time-unit", time_unit,
                        "seconds|minutes|hours|days")
      ->capture_default_str();
  anonymize->add_option("--seed", config.privacy.seed, "Master RNG seed")
      ->capture_default_str();
  anonymize->add_option("--epsilon-cap", config.privacy.epsilon_cap,
                        "Upper bound on any epsilon")
      ->capture_default_str();
  anonymize->add_flag("--monotonic", config.monotonic,
                      "Keep timestamps non-decreasing within a case");
  anonymize->add_option("--format", input_format, "auto|xes|csv")
      ->capture_default_str();
  anonymize->add_option("--output-format", output_format, "same|xes|csv")
      ->capture_default_str();
  anonymize->add_option("--columns", columns,
                        "CSV columns: case,activity,timestamp")
      ->capture_default_str();

  std::string dafsa_input;
  std::string dot_path;
  CLI::App* dafsa_cmd = app.add_subcommand(
      "dafsa", "Print the automaton and contingency table of a log");
  dafsa_cmd->add_option("-i,--input", dafsa_input, "Input log")->required();
  dafsa_cmd->add_option("--dot", dot_path, "Write a Graphviz rendering");
  dafsa_cmd->add_option("--format", input_format, "auto|xes|csv");
  dafsa_cmd->add_option("--columns", columns, "CSV columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? dplog::kExitOk : dplog::kExitConfigError;
  }

  const std::vector<std::string> names = absl::StrSplit(columns, ',');
  if (names.size() != 3) {
    std::cerr << "invalid configuration: --columns needs three names\n";
    return dplog::kExitConfigError;
  }
  config.columns = {names[0], names[1], names[2]};
  if (input_format != "auto" && !FormatFromFlag(input_format)) {
    std::cerr << "invalid configuration: --format must be auto|xes|csv\n";
    return dplog::kExitConfigError;
  }
  config.input_format = FormatFromFlag(input_format);

  if (dafsa_cmd->parsed()) {
    return RunDafsa(dafsa_input, input_format, config.columns, dot_path);
  }

  if (output_format != "same" && !FormatFromFlag(output_format)) {
    std::cerr << "invalid configuration: --output-format must be "
                 "same|xes|csv\n";
    return dplog::kExitConfigError;
  }
  config.output_format = FormatFromFlag(output_format);
  absl::StatusOr<dplog::TimeUnit> unit = dplog::ParseTimeUnit(time_unit);
  if (!unit.ok()) {
    std::cerr << "invalid configuration: time-unit: " << unit.status().message()
              << "\n";
    return dplog::kExitConfigError;
  }
  config.privacy.time_unit = *unit;
  return dplog::Run(config, std::cerr);
}
