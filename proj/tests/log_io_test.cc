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

#include "dplog/log_io.h"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "dplog/event_log.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"
#include "zlib.h"

namespace dplog {
namespace {

using ::dplog::testing::DataPath;
using ::dplog::testing::ClinicLog;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

constexpr char kMinimalXes[] = R"(<?xml version="1.0" encoding="UTF-8"?>
<log xes.version="1.0">
  <trace>
    <string key="concept:name" value="c1"/>
    <event>
      <string key="concept:name" value="A"/>
      <date key="time:timestamp" value="2021-03-01T10:00:00.000+00:00"/>
    </event>
    <event>
      <string key="concept:name" value="B"/>
      <date key="time:timestamp" value="2021-03-01T10:30:00.000+00:00"/>
    </event>
  </trace>
</log>
)";

absl::Time At(const char* text) { return *ParseTimestamp(text); }

TEST(ParseTimestampTest, AcceptsSupportedShapes) {
  const absl::Time base = absl::FromUnixMillis(1596882000000);  // 10:20 UTC
  EXPECT_EQ(At("2020-08-08 10:20:0.000"), base);
  EXPECT_EQ(At("2020-08-08 10:20:00"), base);
  EXPECT_EQ(At("2020-08-08T10:20:00Z"), base);
  EXPECT_EQ(At("2020-08-08T12:20:00.000+02:00"), base);
  EXPECT_EQ(At("2020-08-08T10:20:00"), base);
}

TEST(ParseTimestampTest, TruncatesBelowMilliseconds) {
  EXPECT_EQ(At("2020-08-08 10:20:00.123999"),
            At("2020-08-08 10:20:00.123"));
}

TEST(ParseTimestampTest, RejectsGarbage) {
  EXPECT_FALSE(ParseTimestamp("yesterday").ok());
  EXPECT_FALSE(ParseTimestamp("2020-13-45 10:00:00").ok());
}

TEST(ParseXesTest, MinimalLog) {
  absl::StatusOr<EventLog> log = ParseXes(kMinimalXes);
  ASSERT_TRUE(log.ok()) << log.status();
  ASSERT_EQ(log->traces.size(), 1u);
  EXPECT_EQ(log->traces[0].case_id, "c1");
  EXPECT_THAT(log->traces[0].Variant(), ElementsAre("A", "B"));
  EXPECT_EQ(log->traces[0].events[1].timestamp -
                log->traces[0].events[0].timestamp,
            absl::Minutes(30));
}

TEST(ParseXesTest, WorkedExample) {
  absl::StatusOr<EventLog> log =
      ParseXes(*ReadFileContents(DataPath("clinic.xes")));
  ASSERT_TRUE(log.ok()) << log.status();
  EXPECT_EQ(log->traces.size(), 5u);
  EXPECT_EQ(log->EventCount(), 17u);
}

TEST(ParseXesTest, MatchesCsvRoute) {
  absl::StatusOr<EventLog> xes =
      ParseXes(*ReadFileContents(DataPath("clinic.xes")));
  const EventLog csv = ClinicLog();
  ASSERT_TRUE(xes.ok());
  EXPECT_EQ(xes->traces, csv.traces);
}

TEST(ParseXesTest, MissingTimestampNamesTheCase) {
  constexpr char kXes[] = R"(<log>
  <trace>
    <string key="concept:name" value="patient-7"/>
    <event><string key="concept:name" value="A"/></event>
  </trace>
</log>)";
  absl::StatusOr<EventLog> log = ParseXes(kXes);
  ASSERT_FALSE(log.ok());
  EXPECT_THAT(std::string(log.status().message()), HasSubstr("patient-7"));
  EXPECT_THAT(std::string(log.status().message()),
              HasSubstr("time:timestamp"));
}

TEST(ParseXesTest, MalformedXmlReportsLine) {
  constexpr char kXes[] = "<log>\n<trace>\n<event>\n</trace>\n</log>";
  absl::StatusOr<EventLog> log = ParseXes(kXes);
  ASSERT_FALSE(log.ok());
  EXPECT_THAT(std::string(log.status().message()), HasSubstr("line 4"));
}

TEST(ParseXesTest, TraceWithoutCaseIdIsAnError) {
  constexpr char kXes[] = R"(<log><trace><event>
    <string key="concept:name" value="A"/>
    <date key="time:timestamp" value="2021-01-01T00:00:00Z"/>
  </event></trace></log>)";
  EXPECT_FALSE(ParseXes(kXes).ok());
}

TEST(ParseXesTest, IgnoresGlobalsNestedAttributesAndStartEvents) {
  constexpr char kXes[] = R"(<log>
  <global scope="event"><string key="concept:name" value="__INVALID__"/></global>
  <trace>
    <string key="concept:name" value="c"/>
    <event>
      <string key="concept:name" value="A"/>
      <string key="lifecycle:transition" value="start"/>
      <date key="time:timestamp" value="2021-01-01T00:00:00Z"/>
    </event>
    <event>
      <string key="concept:name" value="A">
        <string key="concept:name" value="nested"/>
      </string>
      <string key="lifecycle:transition" value="complete"/>
      <date key="time:timestamp" value="2021-01-01T01:00:00Z"/>
    </event>
  </trace>
</log>)";
  absl::StatusOr<EventLog> log = ParseXes(kXes);
  ASSERT_TRUE(log.ok()) << log.status();
  ASSERT_EQ(log->traces.size(), 1u);
  EXPECT_THAT(log->traces[0].Variant(), ElementsAre("A"));
  EXPECT_EQ(log->traces[0].events[0].timestamp, At("2021-01-01T01:00:00Z"));
}

TEST(ParseCsvTest, EmptyAfterHeader) {
  absl::StatusOr<EventLog> log = ParseCsv("case,activity,timestamp\n");
  ASSERT_TRUE(log.ok());
  EXPECT_TRUE(log->traces.empty());
}

TEST(ParseCsvTest, EqualTimestampsKeepFileOrder) {
  absl::StatusOr<EventLog> log = ParseCsv(
      "case,activity,timestamp\n"
      "1,Z,2020-01-01 00:00:00\n"
      "1,A,2020-01-01 00:00:00\n"
      "1,M,2020-01-01 00:00:00\n");
  ASSERT_TRUE(log.ok());
  EXPECT_THAT(log->traces[0].Variant(), ElementsAre("Z", "A", "M"));
}

TEST(ParseCsvTest, SortsEventsByTimestamp) {
  absl::StatusOr<EventLog> log = ParseCsv(
      "case,activity,timestamp\n"
      "1,B,2020-01-01 02:00:00\n"
      "2,X,2020-01-01 00:00:00\n"
      "1,A,2020-01-01 01:00:00\n");
  ASSERT_TRUE(log.ok());
  ASSERT_EQ(log->traces.size(), 2u);
  EXPECT_EQ(log->traces[0].case_id, "1");
  EXPECT_THAT(log->traces[0].Variant(), ElementsAre("A", "B"));
}

TEST(ParseCsvTest, CustomColumnsAndExtraFields) {
  ColumnMapping mapping{"CaseID", "Task", "End"};
  absl::StatusOr<EventLog> log = ParseCsv(
      "Resource,End,CaseID,Task\n"
      "bob,2020-01-01T00:00:00Z,7,\"Check, then file\"\n",
      mapping);
  ASSERT_TRUE(log.ok()) << log.status();
  EXPECT_EQ(log->traces[0].case_id, "7");
  EXPECT_EQ(log->traces[0].events[0].activity, "Check, then file");
}

TEST(ParseCsvTest, UnknownColumn) {
  absl::StatusOr<EventLog> log =
      ParseCsv("case,task,timestamp\n", ColumnMapping{});
  ASSERT_FALSE(log.ok());
  EXPECT_THAT(std::string(log.status().message()), HasSubstr("activity"));
}

TEST(ParseCsvTest, BadTimestampReportsRow) {
  absl::StatusOr<EventLog> log = ParseCsv(
      "case,activity,timestamp\n"
      "1,A,2020-01-01 00:00:00\n"
      "1,B,not-a-time\n");
  ASSERT_FALSE(log.ok());
  EXPECT_THAT(std::string(log.status().message()), HasSubstr("row 3"));
}

TEST(ParseCsvTest, QuotedNewlinesAndEscapedQuotes) {
  absl::StatusOr<EventLog> log = ParseCsv(
      "case,activity,timestamp\r\n"
      "1,\"say \"\"hi\"\"\nthen go\",2020-01-01 00:00:00\r\n");
  ASSERT_TRUE(log.ok()) << log.status();
  EXPECT_EQ(log->traces[0].events[0].activity, "say \"hi\"\nthen go");
}

TEST(ParseCsvTest, UnterminatedQuoteIsAnError) {
  EXPECT_FALSE(ParseCsv("case,activity,timestamp\n1,\"A,2020\n").ok());
}

TEST(RelativeTimesTest, WorkedExampleCaseOne) {
  const RelativeTimeView view = RelativeTimes(ClinicLog());
  ASSERT_EQ(view.rel_time[0].size(), 3u);
  EXPECT_DOUBLE_EQ(view.rel_time[0][0], 0.0);
  EXPECT_DOUBLE_EQ(view.rel_time[0][1], 0.5);
  EXPECT_NEAR(view.rel_time[0][2], 5.0 + 55.0 / 60.0, 1e-12);
  // Longest case: 4, 15:00 -> 23:45.
  EXPECT_DOUBLE_EQ(view.r_max, 8.75);
}

TEST(RelativeTimesTest, SingleEventTrace) {
  const EventLog log =
      *AssembleLog({Event{"1", "A", absl::UnixEpoch()}}, SourceMeta{});
  const RelativeTimeView view = RelativeTimes(log);
  EXPECT_THAT(view.rel_time[0], ElementsAre(0.0));
}

TEST(RelativeTimesTest, AllSimultaneousUsesUnitScale) {
  const absl::Time t = absl::FromUnixSeconds(100);
  const EventLog log = *AssembleLog(
      {Event{"1", "A", t}, Event{"1", "B", t}, Event{"2", "A", t}}, {});
  const RelativeTimeView view = RelativeTimes(log);
  EXPECT_EQ(view.r_max, 1.0);
  EXPECT_THAT(view.normalized[0], ElementsAre(0.0, 0.0));
}

TEST(RelativeTimesTest, UnitsScaleValues) {
  const RelativeTimeView minutes =
      RelativeTimes(ClinicLog(), TimeUnit::kMinutes);
  EXPECT_DOUBLE_EQ(minutes.rel_time[0][1], 30.0);
}

TEST(RelativeTimesTest, NormalizationBounds) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 50; ++iter) {
    const EventLog log = testing::RandomLog(rng, 30, 5);
    const RelativeTimeView view = RelativeTimes(log);
    bool saw_one = false;
    bool any_positive = false;
    for (size_t i = 0; i < view.normalized.size(); ++i) {
      EXPECT_EQ(view.rel_time[i][0], 0.0);
      for (double v : view.normalized[i]) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
        saw_one |= v == 1.0;
        any_positive |= v > 0.0;
      }
    }
    if (any_positive) EXPECT_TRUE(saw_one);
  }
}

TEST(WriteLogTest, EmptyLogs) {
  EventLog empty;
  EXPECT_EQ(WriteLogToString(empty, LogFormat::kCsv),
            "case,activity,timestamp\n");
  const std::string xes = WriteLogToString(empty, LogFormat::kXes);
  EXPECT_THAT(xes, HasSubstr("<log"));
  absl::StatusOr<EventLog> back = ParseXes(xes);
  ASSERT_TRUE(back.ok());
  EXPECT_TRUE(back->traces.empty());
}

TEST(WriteLogTest, ReportsBytesWritten) {
  std::ostringstream out;
  absl::StatusOr<size_t> n = WriteLog(ClinicLog(), LogFormat::kCsv, out);
  ASSERT_TRUE(n.ok());
  EXPECT_EQ(*n, out.str().size());
}

TEST(WriteLogTest, FailingSinkIsAnError) {
  std::ofstream closed;
  EXPECT_FALSE(WriteLog(ClinicLog(), LogFormat::kCsv, closed).ok());
}

TEST(WriteLogTest, UnicodeAndMarkupSurviveBothFormats) {
  const EventLog log = *AssembleLog(
      {Event{"ü-1", "Überprüfung <\"&'>", absl::FromUnixMillis(1)},
       Event{"ü-1", "診察, 再診", absl::FromUnixMillis(2)}},
      {});
  for (LogFormat f : {LogFormat::kCsv, LogFormat::kXes}) {
    const std::string bytes = WriteLogToString(log, f);
    absl::StatusOr<EventLog> back =
        f == LogFormat::kCsv ? ParseCsv(bytes) : ParseXes(bytes);
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(back->traces, log.traces);
  }
}

// write then parse is the identity on (case, activity, timestamp@ms).
TEST(WriteLogTest, RoundTripOnRandomLogs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int64_t> ms(0, 999);
  for (int iter = 0; iter < 40; ++iter) {
    EventLog log = testing::RandomLog(rng, 20, 6);
    for (Trace& t : log.traces) {
      for (Event& e : t.events) e.timestamp += absl::Milliseconds(ms(rng));
    }
    std::vector<Event> flat;
    for (const Trace& t : log.traces) {
      flat.insert(flat.end(), t.events.begin(), t.events.end());
    }
    log = *AssembleLog(flat, {});
    for (LogFormat f : {LogFormat::kCsv, LogFormat::kXes}) {
      const std::string bytes = WriteLogToString(log, f);
      absl::StatusOr<EventLog> back =
          f == LogFormat::kCsv ? ParseCsv(bytes) : ParseXes(bytes);
      ASSERT_TRUE(back.ok());
      EXPECT_EQ(back->traces, log.traces);
    }
  }
}

TEST(ReadFileTest, InflatesGzip) {
  const std::string path =
      absl::StrCat(::testing::TempDir(), "/clinic.xes.gz");
  const std::string plain = *ReadFileContents(DataPath("clinic.xes"));
  gzFile gz = gzopen(path.c_str(), "wb");
  ASSERT_NE(gz, nullptr);
  gzwrite(gz, plain.data(), static_cast<unsigned>(plain.size()));
  gzclose(gz);
  absl::StatusOr<std::string> inflated = ReadFileContents(path);
  ASSERT_TRUE(inflated.ok());
  EXPECT_EQ(*inflated, plain);
  EXPECT_EQ(DetectFormat(path, *inflated), LogFormat::kXes);
}

TEST(ReadFileTest, MissingFile) {
  EXPECT_EQ(ReadFileContents("/nonexistent/log.csv").status().code(),
            absl::StatusCode::kNotFound);
}

TEST(DetectFormatTest, ByNameThenContents) {
  EXPECT_EQ(DetectFormat("a.csv", "<x"), LogFormat::kCsv);
  EXPECT_EQ(DetectFormat("a.XES", ""), LogFormat::kXes);
  EXPECT_EQ(DetectFormat("a.log", "  <?xml"), LogFormat::kXes);
  EXPECT_EQ(DetectFormat("a.log", "case,activity"), LogFormat::kCsv);
}

}  // namespace
}  // namespace dplog
