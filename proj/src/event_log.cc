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

#include "dplog/event_log.h"

#include <algorithm>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"

namespace dplog {

std::vector<std::string> Trace::Variant() const {
  std::vector<std::string> labels;
  labels.reserve(events.size());
  for (const Event& e : events) labels.push_back(e.activity);
  return labels;
}

size_t EventLog::EventCount() const {
  size_t n = 0;
  for (const Trace& t : traces) n += t.events.size();
  return n;
}

absl::Time TruncateToMillis(absl::Time t) {
  return absl::FromUnixMillis(absl::ToUnixMillis(t));
}

absl::StatusOr<EventLog> AssembleLog(std::vector<Event> events,
                                     SourceMeta meta) {
  EventLog log;
  log.source_meta = std::move(meta);
  absl::flat_hash_map<std::string, size_t> index;
  for (Event& e : events) {
    if (e.activity.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("event with empty activity in case '", e.case_id, "'"));
    }
    e.timestamp = TruncateToMillis(e.timestamp);
    auto [it, inserted] = index.try_emplace(e.case_id, log.traces.size());
    if (inserted) log.traces.push_back(Trace{e.case_id, {}});
    log.traces[it->second].events.push_back(std::move(e));
  }
  for (Trace& t : log.traces) {
    std::stable_sort(t.events.begin(), t.events.end(),
                     [](const Event& a, const Event& b) {
                       return a.timestamp < b.timestamp;
                     });
  }
  return log;
}

absl::Duration UnitDuration(TimeUnit unit) {
  switch (unit) {
    case TimeUnit::kSeconds:
      return absl::Seconds(1);
    case TimeUnit::kMinutes:
      return absl::Minutes(1);
    case TimeUnit::kHours:
      return absl::Hours(1);
    case TimeUnit::kDays:
      return absl::Hours(24);
  }
  return absl::Hours(1);
}

absl::StatusOr<TimeUnit> ParseTimeUnit(absl::string_view name) {
  const std::string lower = absl::AsciiStrToLower(name);
  if (lower == "seconds") return TimeUnit::kSeconds;
  if (lower == "minutes") return TimeUnit::kMinutes;
  if (lower == "hours") return TimeUnit::kHours;
  if (lower == "days") return TimeUnit::kDays;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown time unit '", name, "' (expected seconds|minutes|hours|days)"));
}

absl::string_view TimeUnitName(TimeUnit unit) {
  switch (unit) {
    case TimeUnit::kSeconds:
      return "seconds";
    case TimeUnit::kMinutes:
      return "minutes";
    case TimeUnit::kHours:
      return "hours";
    case TimeUnit::kDays:
      return "days";
  }
  return "hours";
}

namespace {

std::vector<std::vector<double>> OffsetsFromStart(const EventLog& log,
                                                  TimeUnit unit) {
  const absl::Duration step = UnitDuration(unit);
  std::vector<std::vector<double>> rel(log.traces.size());
  for (size_t i = 0; i < log.traces.size(); ++i) {
    const Trace& t = log.traces[i];
    rel[i].reserve(t.events.size());
    if (t.events.empty()) continue;
    const absl::Time start = t.events.front().timestamp;
    for (const Event& e : t.events) {
      rel[i].push_back(absl::FDivDuration(e.timestamp - start, step));
    }
  }
  return rel;
}

}  // namespace

RelativeTimeView RelativeTimesWithScale(const EventLog& log, TimeUnit unit,
                                        double r_max) {
  RelativeTimeView view;
  view.unit = unit;
  view.rel_time = OffsetsFromStart(log, unit);
  view.r_max = r_max > 0 ? r_max : 1.0;
  view.normalized.resize(view.rel_time.size());
  for (size_t i = 0; i < view.rel_time.size(); ++i) {
    view.normalized[i].reserve(view.rel_time[i].size());
    for (double v : view.rel_time[i]) {
      view.normalized[i].push_back(v / view.r_max);
    }
  }
  return view;
}

RelativeTimeView RelativeTimes(const EventLog& log, TimeUnit unit) {
  double r_max = 0;
  for (const auto& trace : OffsetsFromStart(log, unit)) {
    for (double v : trace) r_max = std::max(r_max, v);
  }
  // All-simultaneous logs have nothing to normalize.
  if (r_max <= 0) r_max = 1.0;
  return RelativeTimesWithScale(log, unit, r_max);
}

}  // namespace dplog
