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

#include <algorithm>
#include <cstddef>
#include <string>
#include "absl/strings/string_view.h"
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/strip.h"
#include "dplog/log_io.h"
#include "log_io_internal.h"

namespace dplog {
namespace {

struct Record {
  std::vector<std::string> fields;
  size_t line = 0;
};

// RFC 4180 reader. Accepts LF or CRLF record separators; quoted fields may
// span lines. Blank lines are skipped.
absl::StatusOr<std::vector<Record>> SplitRecords(absl::string_view text) {
  absl::ConsumePrefix(&text, "\xEF\xBB\xBF");
  std::vector<Record> records;
  Record current;
  std::string field;
  size_t line = 1;
  current.line = line;
  bool in_quotes = false;
  bool field_started = false;

  auto end_record = [&]() {
    if (field_started || !current.fields.empty()) {
      current.fields.push_back(std::move(field));
      records.push_back(std::move(current));
    }
    current = Record{};
    field.clear();
    field_started = false;
  };

  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          return absl::InvalidArgumentError(
              absl::StrCat("stray quote inside unquoted field on line ", line));
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        current.fields.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        field.push_back(c);
        break;
      case '\n':
        end_record();
        current.line = ++line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) {
    return absl::InvalidArgumentError(
        absl::StrCat("unterminated quoted field starting before line ", line));
  }
  end_record();
  return records;
}

absl::StatusOr<size_t> FindColumn(const std::vector<std::string>& header,
                                  absl::string_view name) {
  for (size_t i = 0; i < header.size(); ++i) {
    if (absl::StripAsciiWhitespace(header[i]) == name) return i;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown column '", name, "' in CSV header"));
}

bool NeedsQuoting(absl::string_view field) {
  return field.find_first_of(",\"\r\n") != absl::string_view::npos;
}

void AppendField(absl::string_view field, std::string* out) {
  if (!NeedsQuoting(field)) {
    out->append(field.data(), field.size());
    return;
  }
  out->push_back('"');
  for (char c : field) {
    if (c == '"') out->push_back('"');
    out->push_back(c);
  }
  out->push_back('"');
}

}  // namespace

absl::StatusOr<EventLog> ParseCsv(absl::string_view source,
                                  const ColumnMapping& mapping) {
  absl::StatusOr<std::vector<Record>> records = SplitRecords(source);
  if (!records.ok()) return records.status();
  if (records->empty()) {
    return absl::InvalidArgumentError("CSV input has no header row");
  }
  const std::vector<std::string>& header = records->front().fields;
  absl::StatusOr<size_t> case_col = FindColumn(header, mapping.case_column);
  if (!case_col.ok()) return case_col.status();
  absl::StatusOr<size_t> activity_col =
      FindColumn(header, mapping.activity_column);
  if (!activity_col.ok()) return activity_col.status();
  absl::StatusOr<size_t> time_col =
      FindColumn(header, mapping.timestamp_column);
  if (!time_col.ok()) return time_col.status();
  const size_t needed = std::max({*case_col, *activity_col, *time_col}) + 1;

  std::vector<Event> events;
  events.reserve(records->size() - 1);
  for (size_t r = 1; r < records->size(); ++r) {
    Record& rec = (*records)[r];
    if (rec.fields.size() < needed) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", rec.line, " has ", rec.fields.size(),
                       " fields, expected at least ", needed));
    }
    absl::StatusOr<absl::Time> ts = ParseTimestamp(rec.fields[*time_col]);
    if (!ts.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", rec.line, ": ", ts.status().message()));
    }
    if (rec.fields[*activity_col].empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", rec.line, ": empty activity"));
    }
    events.push_back(Event{std::move(rec.fields[*case_col]),
                           std::move(rec.fields[*activity_col]), *ts});
  }
  return AssembleLog(std::move(events), SourceMeta{LogFormat::kCsv, mapping});
}

namespace internal {

void AppendCsv(const EventLog& log, std::string* out) {
  const ColumnMapping& cols = log.source_meta.columns;
  AppendField(cols.case_column, out);
  out->push_back(',');
  AppendField(cols.activity_column, out);
  out->push_back(',');
  AppendField(cols.timestamp_column, out);
  out->push_back('\n');
  for (const Trace& trace : log.traces) {
    for (const Event& e : trace.events) {
      AppendField(e.case_id, out);
      out->push_back(',');
      AppendField(e.activity, out);
      out->push_back(',');
      out->append(absl::FormatTime("%Y-%m-%d %H:%M:%E3S", e.timestamp,
                                   absl::UTCTimeZone()));
      out->push_back('\n');
    }
  }
}

}  // namespace internal
}  // namespace dplog
