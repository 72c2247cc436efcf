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

#include "dplog/oversampler.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_format.h"
#include "dplog/random.h"
#include "dplog/risk.h"

namespace dplog {

bool OversamplePlan::Satisfied() const {
  for (size_t t = 0; t < needed_noise.size(); ++t) {
    if (added_noise[t] < needed_noise[t]) return false;
  }
  return true;
}

int64_t OversamplePlan::TotalNeeded() const {
  return std::accumulate(needed_noise.begin(), needed_noise.end(), int64_t{0});
}

OversamplePlan PlanFromMagnitudes(const std::vector<double>& abs_noise) {
  OversamplePlan plan;
  plan.needed_noise.reserve(abs_noise.size());
  for (double z : abs_noise) {
    plan.needed_noise.push_back(static_cast<int64_t>(std::ceil(std::abs(z))));
  }
  plan.added_noise.assign(abs_noise.size(), 0);
  return plan;
}

OversamplePlan DrawNeededNoise(const Dafsa& dafsa, double count_epsilon,
                               uint64_t seed) {
  const double scale = kCountSensitivity / count_epsilon;
  std::vector<double> magnitudes;
  magnitudes.reserve(dafsa.num_transitions());
  for (TransitionId t = 0; t < dafsa.num_transitions(); ++t) {
    RandomStream rng = RandomStream::Derive(seed, StreamKind::kCountNoise, t);
    magnitudes.push_back(std::abs(SampleLaplace(scale, rng)));
  }
  return PlanFromMagnitudes(magnitudes);
}

namespace {

std::string FreshCaseId(RandomStream& rng) {
  const uint64_t hi = rng();
  const uint64_t lo = rng();
  return absl::StrFormat("%016x%016x", hi, lo);
}

}  // namespace

OversampleResult Oversample(const EventLog& log,
                            const TransitionVariantLookup& lookup,
                            const ContingencyTable& counts,
                            OversamplePlan plan, uint64_t seed) {
  RandomStream rng = RandomStream::Derive(seed, StreamKind::kOversample, 0);
  std::vector<size_t> replica_sources;
  std::vector<TransitionId> deficient;
  std::vector<double> weights;

  while (true) {
    deficient.clear();
    weights.clear();
    for (size_t t = 0; t < plan.needed_noise.size(); ++t) {
      if (plan.added_noise[t] < plan.needed_noise[t]) {
        deficient.push_back(static_cast<TransitionId>(t));
        weights.push_back(static_cast<double>(counts.count(t)));
      }
    }
    if (deficient.empty()) break;
    std::discrete_distribution<size_t> pick_transition(weights.begin(),
                                                       weights.end());
    const TransitionId selected = deficient[pick_transition(rng)];

    const std::vector<size_t>& through = lookup.by_transition[selected];
    std::vector<double> variant_weights;
    variant_weights.reserve(through.size());
    for (size_t v : through) {
      variant_weights.push_back(
          static_cast<double>(lookup.variants[v].cases.size()));
    }
    std::discrete_distribution<size_t> pick_variant(variant_weights.begin(),
                                                    variant_weights.end());
    // Replicate until this transition's deficit closes; each copy advances
    // every transition on its path.
    while (plan.added_noise[selected] < plan.needed_noise[selected]) {
      const auto& variant = lookup.variants[through[pick_variant(rng)]];
      std::uniform_int_distribution<size_t> pick_case(
          0, variant.cases.size() - 1);
      replica_sources.push_back(variant.cases[pick_case(rng)]);
      for (TransitionId t : variant.path) ++plan.added_noise[t];
    }
  }

  OversampleResult result;
  result.plan = std::move(plan);
  result.replicas = replica_sources.size();

  const size_t m = log.traces.size();
  std::vector<int> copies(m, 1);
  for (size_t s : replica_sources) ++copies[s];

  result.source.resize(m);
  std::iota(result.source.begin(), result.source.end(), size_t{0});
  result.source.insert(result.source.end(), replica_sources.begin(),
                       replica_sources.end());

  absl::flat_hash_set<std::string> taken;
  for (const Trace& t : log.traces) taken.insert(t.case_id);
  RandomStream id_rng = RandomStream::Derive(seed, StreamKind::kCaseIds, 0);
  std::vector<std::string> ids;
  ids.reserve(result.source.size());
  while (ids.size() < result.source.size()) {
    std::string id = FreshCaseId(id_rng);
    if (taken.insert(id).second) ids.push_back(std::move(id));
  }

  std::vector<size_t> order(result.source.size());
  std::iota(order.begin(), order.end(), size_t{0});
  RandomStream shuffle_rng = RandomStream::Derive(seed, StreamKind::kShuffle, 0);
  std::shuffle(order.begin(), order.end(), shuffle_rng);

  result.log.source_meta = log.source_meta;
  result.log.traces.reserve(order.size());
  std::vector<size_t> shuffled_source;
  shuffled_source.reserve(order.size());
  for (size_t pos : order) {
    const size_t src = result.source[pos];
    Trace copy = log.traces[src];
    copy.case_id = ids[pos];
    for (Event& e : copy.events) e.case_id = copy.case_id;
    result.record.by_new_id.emplace(
        copy.case_id,
        ReplicationRecord::Entry{log.traces[src].case_id, copies[src]});
    result.log.traces.push_back(std::move(copy));
    shuffled_source.push_back(src);
    result.group_size.push_back(copies[src]);
  }
  result.source = std::move(shuffled_source);
  return result;
}

absl::flat_hash_map<std::string, int> ReplicationGroups(
    const ReplicationRecord& record) {
  absl::flat_hash_map<std::string, int> groups;
  for (const auto& [new_id, entry] : record.by_new_id) {
    groups[entry.source_case_id] = entry.group_size;
  }
  return groups;
}

}  // namespace dplog
