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

// Reading and writing event logs. Two formats are supported: a subset of
// XES (traces, events, concept:name and time:timestamp attributes) and
// RFC 4180 CSV with one row per event.

#ifndef DPLOG_LOG_IO_H_
#define DPLOG_LOG_IO_H_

#include <cstddef>
#include <ostream>
#include <string>
#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"
#include "absl/time/time.h"
#include "dplog/event_log.h"

namespace dplog {

// Accepts ISO-8601 (with or without zone designator, 'T' or ' ' separator)
// and "YYYY-MM-DD HH:MM:SS.fff". Instants without a zone are read as UTC.
// Sub-millisecond digits are truncated.
absl::StatusOr<absl::Time> ParseTimestamp(absl::string_view text);

// "YYYY-MM-DDTHH:MM:SS.fff+00:00".
std::string FormatTimestampIso(absl::Time t);

// Events whose lifecycle:transition is "start" are dropped, so logs carrying
// start and complete events reduce to completion times.
absl::StatusOr<EventLog> ParseXes(absl::string_view source);

absl::StatusOr<EventLog> ParseCsv(absl::string_view source,
                                  const ColumnMapping& mapping = {});

// Returns the number of bytes written.
absl::StatusOr<size_t> WriteLog(const EventLog& log, LogFormat format,
                                std::ostream& sink);
std::string WriteLogToString(const EventLog& log, LogFormat format);

// Reads a whole file. Gzip-compressed input (e.g. ".xes.gz") is inflated
// transparently.
absl::StatusOr<std::string> ReadFileContents(const std::string& path);

// Picks a format from the file name (".xes", ".xes.gz", ".csv"), falling back
// to sniffing for a leading '<'.
LogFormat DetectFormat(absl::string_view path, absl::string_view contents);

}  // namespace dplog

#endif  // DPLOG_LOG_IO_H_
