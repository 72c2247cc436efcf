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

#ifndef DPLOG_EVENT_LOG_H_
#define DPLOG_EVENT_LOG_H_

#include <cstddef>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "absl/time/time.h"

namespace dplog {

// One execution of an activity within a case. Timestamps carry millisecond
// resolution.
struct Event {
  std::string case_id;
  std::string activity;
  absl::Time timestamp;

  friend bool operator==(const Event&, const Event&) = default;
};

// All events of one case, ordered by (timestamp, original file position).
struct Trace {
  std::string case_id;
  std::vector<Event> events;

  // The activity sequence of this trace.
  std::vector<std::string> Variant() const;

  friend bool operator==(const Trace&, const Trace&) = default;
};

enum class LogFormat { kXes, kCsv };

// Names of the CSV columns holding the three core attributes.
struct ColumnMapping {
  std::string case_column = "case";
  std::string activity_column = "activity";
  std::string timestamp_column = "timestamp";

  friend bool operator==(const ColumnMapping&, const ColumnMapping&) = default;
};

struct SourceMeta {
  LogFormat format = LogFormat::kCsv;
  ColumnMapping columns;
};

struct EventLog {
  std::vector<Trace> traces;
  SourceMeta source_meta;

  size_t EventCount() const;
};

// Groups loose events into traces. Cases appear in order of first
// occurrence; within a case, events are stably sorted by timestamp so equal
// timestamps keep their input order. Events with an empty activity are
// rejected.
absl::StatusOr<EventLog> AssembleLog(std::vector<Event> events,
                                     SourceMeta meta);

// Truncates an instant to whole milliseconds.
absl::Time TruncateToMillis(absl::Time t);

enum class TimeUnit { kSeconds, kMinutes, kHours, kDays };

absl::Duration UnitDuration(TimeUnit unit);
absl::StatusOr<TimeUnit> ParseTimeUnit(absl::string_view name);
absl::string_view TimeUnitName(TimeUnit unit);

// Relative execution times: the offset of every event from the first event
// of its trace, in a fixed unit, plus the same values divided by the largest
// offset in the log.
struct RelativeTimeView {
  TimeUnit unit = TimeUnit::kHours;
  // Indexed [trace][event], parallel to EventLog::traces.
  std::vector<std::vector<double>> rel_time;
  std::vector<std::vector<double>> normalized;
  // Largest rel_time in the log; 1 when every rel_time is 0.
  double r_max = 1.0;
};

RelativeTimeView RelativeTimes(const EventLog& log,
                               TimeUnit unit = TimeUnit::kHours);

// Same as above but divides by a caller-supplied scale. Used when the view
// must share the normalization of another log.
RelativeTimeView RelativeTimesWithScale(const EventLog& log, TimeUnit unit,
                                        double r_max);

}  // namespace dplog

#endif  // DPLOG_EVENT_LOG_H_
