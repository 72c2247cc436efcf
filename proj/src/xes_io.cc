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

#include <cstring>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"
#include <utility>
#include <vector>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "dplog/log_io.h"
#include "expat.h"
#include "log_io_internal.h"

namespace dplog {
namespace {

struct PendingEvent {
  std::optional<std::string> activity;
  std::optional<std::string> timestamp;
  std::string lifecycle;
  long line = 0;
};

struct PendingTrace {
  std::optional<std::string> case_id;
  std::vector<PendingEvent> events;
  long line = 0;
};

// Expat callbacks feed this. Only attributes whose parent element is a
// <trace> or <event> are considered; nested attributes, globals and
// classifiers are skipped.
class XesHandler {
 public:
  explicit XesHandler(XML_Parser parser) : parser_(parser) {}

  void Start(absl::string_view name, const XML_Char** attrs) {
    const absl::string_view parent =
        stack_.empty() ? absl::string_view() : absl::string_view(stack_.back());
    stack_.emplace_back(name);
    if (name == "trace" && parent == "log") {
      trace_.emplace();
      trace_->line = Line();
      return;
    }
    if (name == "event" && parent == "trace" && trace_) {
      event_.emplace();
      event_->line = Line();
      return;
    }
    if (parent != "trace" && parent != "event") return;

    const char* key = nullptr;
    const char* value = nullptr;
    for (int i = 0; attrs[i] != nullptr; i += 2) {
      if (std::strcmp(attrs[i], "key") == 0) key = attrs[i + 1];
      if (std::strcmp(attrs[i], "value") == 0) value = attrs[i + 1];
    }
    if (key == nullptr || value == nullptr) return;
    const absl::string_view k(key);
    if (parent == "trace" && event_ == std::nullopt && trace_ &&
        k == "concept:name") {
      trace_->case_id = value;
    } else if (parent == "event" && event_) {
      if (k == "concept:name") event_->activity = value;
      if (k == "time:timestamp") event_->timestamp = value;
      if (k == "lifecycle:transition") {
        event_->lifecycle = absl::AsciiStrToLower(value);
      }
    }
  }

  void End(absl::string_view name) {
    stack_.pop_back();
    const absl::string_view parent =
        stack_.empty() ? absl::string_view() : absl::string_view(stack_.back());
    if (name == "event" && parent == "trace" && event_ && trace_) {
      trace_->events.push_back(*std::move(event_));
      event_.reset();
    } else if (name == "trace" && parent == "log" && trace_) {
      Fail(FinishTrace(*std::move(trace_)));
      trace_.reset();
    }
  }

  void Fail(absl::Status status) {
    if (status.ok() || !status_.ok()) return;
    status_ = std::move(status);
    XML_StopParser(parser_, XML_FALSE);
  }

  const absl::Status& status() const { return status_; }
  std::vector<Event> TakeEvents() { return std::move(events_); }

 private:
  long Line() const {
    return static_cast<long>(XML_GetCurrentLineNumber(parser_));
  }

  absl::Status FinishTrace(PendingTrace trace) {
    if (!trace.case_id) {
      return absl::InvalidArgumentError(absl::StrCat(
          "trace at line ", trace.line, " has no concept:name case id"));
    }
    const std::string& case_id = *trace.case_id;
    if (!case_ids_.insert(case_id).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate case id '", case_id, "' at line ",
                       trace.line));
    }
    for (PendingEvent& e : trace.events) {
      if (!e.activity || e.activity->empty()) {
        return absl::InvalidArgumentError(
            absl::StrCat("event at line ", e.line, " in case '", case_id,
                         "' is missing concept:name"));
      }
      if (!e.timestamp) {
        return absl::InvalidArgumentError(
            absl::StrCat("event at line ", e.line, " in case '", case_id,
                         "' is missing time:timestamp"));
      }
      if (e.lifecycle == "start") continue;
      absl::StatusOr<absl::Time> ts = ParseTimestamp(*e.timestamp);
      if (!ts.ok()) {
        return absl::InvalidArgumentError(
            absl::StrCat("event at line ", e.line, " in case '", case_id,
                         "': ", ts.status().message()));
      }
      events_.push_back(Event{case_id, *std::move(e.activity), *ts});
    }
    return absl::OkStatus();
  }

  XML_Parser parser_;
  std::vector<std::string> stack_;
  std::optional<PendingTrace> trace_;
  std::optional<PendingEvent> event_;
  absl::flat_hash_set<std::string> case_ids_;
  std::vector<Event> events_;
  absl::Status status_;
};

void XMLCALL OnStart(void* data, const XML_Char* name, const XML_Char** attrs) {
  static_cast<XesHandler*>(data)->Start(name, attrs);
}

void XMLCALL OnEnd(void* data, const XML_Char* name) {
  static_cast<XesHandler*>(data)->End(name);
}

void AppendEscaped(absl::string_view text, std::string* out) {
  for (char c : text) {
    switch (c) {
      case '&':
        out->append("&amp;");
        break;
      case '<':
        out->append("&lt;");
        break;
      case '>':
        out->append("&gt;");
        break;
      case '"':
        out->append("&quot;");
        break;
      case '\'':
        out->append("&apos;");
        break;
      default:
        out->push_back(c);
    }
  }
}

}  // namespace

absl::StatusOr<EventLog> ParseXes(absl::string_view source) {
  XML_Parser parser = XML_ParserCreate("UTF-8");
  if (parser == nullptr) return absl::InternalError("expat allocation failed");
  XesHandler handler(parser);
  XML_SetUserData(parser, &handler);
  XML_SetElementHandler(parser, OnStart, OnEnd);
  const XML_Status result =
      XML_Parse(parser, source.data(), static_cast<int>(source.size()),
                XML_TRUE);
  absl::Status status = handler.status();
  if (status.ok() && result != XML_STATUS_OK) {
    status = absl::InvalidArgumentError(absl::StrCat(
        "malformed XES at line ", XML_GetCurrentLineNumber(parser),
        ", column ", XML_GetCurrentColumnNumber(parser), ": ",
        XML_ErrorString(XML_GetErrorCode(parser))));
  }
  std::vector<Event> events = handler.TakeEvents();
  XML_ParserFree(parser);
  if (!status.ok()) return status;
  return AssembleLog(std::move(events), SourceMeta{LogFormat::kXes, {}});
}

namespace internal {

void AppendXes(const EventLog& log, std::string* out) {
  out->append(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<log xes.version=\"1.0\" xmlns=\"http://www.xes-standard.org/\">\n"
      "  <extension name=\"Concept\" prefix=\"concept\" "
      "uri=\"http://www.xes-standard.org/concept.xesext\"/>\n"
      "  <extension name=\"Time\" prefix=\"time\" "
      "uri=\"http://www.xes-standard.org/time.xesext\"/>\n");
  for (const Trace& trace : log.traces) {
    out->append("  <trace>\n    <string key=\"concept:name\" value=\"");
    AppendEscaped(trace.case_id, out);
    out->append("\"/>\n");
    for (const Event& e : trace.events) {
      out->append("    <event>\n      <string key=\"concept:name\" value=\"");
      AppendEscaped(e.activity, out);
      absl::StrAppend(out, "\"/>\n      <date key=\"time:timestamp\" value=\"",
                      FormatTimestampIso(e.timestamp), "\"/>\n    </event>\n");
    }
    out->append("  </trace>\n");
  }
  out->append("</log>\n");
}

}  // namespace internal
}  // namespace dplog
