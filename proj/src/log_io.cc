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

#include <array>
#include <sstream>
#include <string>
#include "absl/strings/string_view.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/match.h"
#include "absl/strings/strip.h"
#include "dplog/log_io.h"
#include "log_io_internal.h"
#include "zlib.h"

namespace dplog {

absl::StatusOr<absl::Time> ParseTimestamp(absl::string_view text) {
  static constexpr std::array<const char*, 4> kFormats = {
      "%Y-%m-%d%ET%H:%M:%E*S%Ez",
      "%Y-%m-%d%ET%H:%M:%E*S",
      "%Y-%m-%d %H:%M:%E*S%Ez",
      "%Y-%m-%d %H:%M:%E*S",
  };
  const std::string trimmed(absl::StripAsciiWhitespace(text));
  for (const char* format : kFormats) {
    absl::Time t;
    if (absl::ParseTime(format, trimmed, absl::UTCTimeZone(), &t, nullptr)) {
      return TruncateToMillis(t);
    }
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unparseable timestamp '", text, "'"));
}

std::string FormatTimestampIso(absl::Time t) {
  return absl::FormatTime("%Y-%m-%dT%H:%M:%E3S%Ez", t, absl::UTCTimeZone());
}

absl::StatusOr<std::string> ReadFileContents(const std::string& path) {
  gzFile file = gzopen(path.c_str(), "rb");
  if (file == nullptr) {
    return absl::NotFoundError(absl::StrCat("cannot open '", path, "'"));
  }
  std::string out;
  std::array<char, 1 << 16> buffer;
  int n = 0;
  while ((n = gzread(file, buffer.data(), buffer.size())) > 0) {
    out.append(buffer.data(), static_cast<size_t>(n));
  }
  int errnum = Z_OK;
  const char* message = gzerror(file, &errnum);
  gzclose(file);
  if (n < 0 || (errnum != Z_OK && errnum != Z_STREAM_END)) {
    return absl::DataLossError(
        absl::StrCat("error reading '", path, "': ", message));
  }
  return out;
}

LogFormat DetectFormat(absl::string_view path, absl::string_view contents) {
  absl::string_view stem = path;
  absl::ConsumeSuffix(&stem, ".gz");
  if (absl::EndsWithIgnoreCase(stem, ".xes") ||
      absl::EndsWithIgnoreCase(stem, ".xml")) {
    return LogFormat::kXes;
  }
  if (absl::EndsWithIgnoreCase(stem, ".csv")) return LogFormat::kCsv;
  absl::string_view head = absl::StripLeadingAsciiWhitespace(contents);
  absl::ConsumePrefix(&head, "\xEF\xBB\xBF");
  return absl::StartsWith(head, "<") ? LogFormat::kXes : LogFormat::kCsv;
}

absl::StatusOr<size_t> WriteLog(const EventLog& log, LogFormat format,
                                std::ostream& sink) {
  std::string bytes;
  if (format == LogFormat::kXes) {
    internal::AppendXes(log, &bytes);
  } else {
    internal::AppendCsv(log, &bytes);
  }
  sink.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  sink.flush();
  if (!sink) return absl::DataLossError("failed writing event log to sink");
  return bytes.size();
}

std::string WriteLogToString(const EventLog& log, LogFormat format) {
  std::ostringstream out;
  // Writing to a string stream cannot fail.
  (void)WriteLog(log, format, out);
  return out.str();
}

}  // namespace dplog
