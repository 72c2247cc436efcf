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

// Fixtures and random generators shared by the test binaries.

#ifndef DPLOG_TESTS_TEST_UTIL_H_
#define DPLOG_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/time/time.h"
#include "dplog/dafsa.h"
#include "dplog/event_log.h"
#include "dplog/log_io.h"

namespace dplog::testing {

inline std::string DataPath(const std::string& name) {
  return absl::StrCat(DPLOG_TEST_DATA_DIR, "/", name);
}

// The 5-case, 17-event healthcare log used as the worked example.
inline EventLog ClinicLog() {
  absl::StatusOr<std::string> text = ReadFileContents(DataPath("clinic.csv"));
  absl::StatusOr<EventLog> log = ParseCsv(*text);
  return *std::move(log);
}

inline std::vector<Variant> ClinicVariants() {
  return {{"A", "B", "C"}, {"D", "A", "E", "C"}, {"D", "A", "B", "C"},
          {"A", "E", "C"}};
}

inline std::string Label(int i) { return std::string(1, char('A' + i)); }

// Up to `max_variants` distinct non-empty words of length <= max_len over an
// alphabet of `alphabet` letters.
inline std::vector<Variant> RandomVariantSet(std::mt19937_64& rng,
                                             int max_variants, int max_len,
                                             int alphabet) {
  std::uniform_int_distribution<int> count(1, max_variants);
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> letter(0, alphabet - 1);
  std::set<Variant> words;
  // Number of distinct words available: alphabet + alphabet^2 + ...
  long available = 0;
  for (long p = 1, k = 1; k <= max_len; ++k) available += (p *= alphabet);
  const int n = static_cast<int>(std::min<long>(count(rng), available));
  while (static_cast<int>(words.size()) < n) {
    Variant v(len(rng));
    for (auto& l : v) l = Label(letter(rng));
    words.insert(v);
  }
  return {words.begin(), words.end()};
}

// A log of up to `max_cases` cases over `max_activities` labels. Cases reuse
// a small pool of variants so that most variants have several instances.
inline EventLog RandomLog(std::mt19937_64& rng, int max_cases,
                          int max_activities) {
  std::uniform_int_distribution<int> cases(1, max_cases);
  std::uniform_int_distribution<int> alphabet(1, max_activities);
  const std::vector<Variant> pool =
      RandomVariantSet(rng, 8, 6, alphabet(rng));
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> gap_minutes(0, 600);
  std::uniform_int_distribution<int> start_minutes(0, 60 * 24 * 30);
  const absl::Time origin = absl::FromUnixSeconds(1'600'000'000);
  std::vector<Event> events;
  const int m = cases(rng);
  for (int c = 0; c < m; ++c) {
    const std::string id = absl::StrCat("case-", c);
    absl::Time t = origin + absl::Minutes(start_minutes(rng));
    for (const std::string& label : pool[pick(rng)]) {
      events.push_back(Event{id, label, t});
      t += absl::Minutes(gap_minutes(rng));
    }
  }
  return *AssembleLog(std::move(events), SourceMeta{});
}

}  // namespace dplog::testing

#endif  // DPLOG_TESTS_TEST_UTIL_H_
