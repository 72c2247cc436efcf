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

// Count perturbation by whole-case oversampling. Each transition draws a
// non-negative integer amount of noise; cases are then replicated until
// every transition's count has grown by at least that amount. Only existing
// cases are copied, so the set of case variants never changes.

#ifndef DPLOG_OVERSAMPLER_H_
#define DPLOG_OVERSAMPLER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "dplog/dafsa.h"
#include "dplog/event_log.h"

namespace dplog {

struct OversamplePlan {
  // Indexed by TransitionId.
  std::vector<int64_t> needed_noise;
  std::vector<int64_t> added_noise;

  bool Satisfied() const;
  int64_t TotalNeeded() const;
};

// needed_noise[t] = ceil(|z_t|), z_t ~ Lap(1 / count_epsilon), drawn from
// the per-transition substream of `seed`.
OversamplePlan DrawNeededNoise(const Dafsa& dafsa, double count_epsilon,
                               uint64_t seed);

// Same, with an explicit noise magnitude per transition.
OversamplePlan PlanFromMagnitudes(const std::vector<double>& abs_noise);

struct ReplicationRecord {
  struct Entry {
    std::string source_case_id;
    // Copies of the source in the output, the original included.
    int group_size = 1;
  };
  absl::flat_hash_map<std::string, Entry> by_new_id;
};

struct OversampleResult {
  EventLog log;
  ReplicationRecord record;
  // source[i]: index in the input log of the case output trace i copies.
  std::vector<size_t> source;
  // group_size[i]: copies of source[i] in the output, the original included.
  std::vector<int> group_size;
  // Plan after the loop; added_noise >= needed_noise everywhere.
  OversamplePlan plan;
  size_t replicas = 0;
};

// Runs the replication loop. A deficient transition is picked with weight
// equal to its contingency count, then a variant through it weighted by its
// number of cases, then a uniform case of that variant; the copy raises the
// added noise of every transition on the variant's path. Afterwards all
// cases receive fresh 128-bit hex ids and the case order is shuffled.
//
// `lookup` and `counts` must come from the annotation of `log`.
OversampleResult Oversample(const EventLog& log,
                            const TransitionVariantLookup& lookup,
                            const ContingencyTable& counts,
                            OversamplePlan plan, uint64_t seed);

// Source case id -> group size k (1 + number of replicas).
absl::flat_hash_map<std::string, int> ReplicationGroups(
    const ReplicationRecord& record);

}  // namespace dplog

#endif  // DPLOG_OVERSAMPLER_H_
