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

// Minimal deterministic acyclic automaton (DAFSA) over the case variants of
// an event log. Each state groups the prefixes that share one set of
// suffixes, so every transition identifies a (prefix, suffix) class. The
// per-transition event counts form the contingency table that oversampling
// perturbs.

#ifndef DPLOG_DAFSA_H_
#define DPLOG_DAFSA_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "dplog/event_log.h"

namespace dplog {

using StateId = int32_t;
using TransitionId = int32_t;
using Variant = std::vector<std::string>;

struct Transition {
  StateId source;
  std::string label;
  StateId target;

  friend bool operator==(const Transition&, const Transition&) = default;
};

class Dafsa {
 public:
  // Builds the minimal automaton accepting exactly `variants` using sorted
  // incremental construction. Duplicates are allowed and collapse. Fails on
  // an empty set or an empty word.
  static absl::StatusOr<Dafsa> Build(std::vector<Variant> variants);

  StateId initial() const { return 0; }
  int num_states() const { return static_cast<int>(final_.size()); }
  int num_transitions() const { return static_cast<int>(transitions_.size()); }
  bool is_final(StateId s) const { return final_[s]; }

  const Transition& transition(TransitionId id) const {
    return transitions_[id];
  }
  const std::vector<Transition>& transitions() const { return transitions_; }

  // Outgoing transition ids of `s`, ordered by label.
  const std::map<std::string, TransitionId>& out(StateId s) const {
    return out_[s];
  }

  std::optional<TransitionId> Step(StateId s, const std::string& label) const;

  // The accepting path of `word`, or nullopt if the word is not accepted.
  std::optional<std::vector<TransitionId>> Path(
      absl::Span<const std::string> word) const;

  bool Accepts(absl::Span<const std::string> word) const {
    return Path(word).has_value();
  }

  // Every accepted word, in lexicographic order.
  std::vector<Variant> Language() const;

  // Graphviz rendering; final states are drawn as double circles.
  std::string ToDot() const;

 private:
  std::vector<bool> final_;
  std::vector<std::map<std::string, TransitionId>> out_;
  std::vector<Transition> transitions_;
};

// Distinct variants of a log, in order of first occurrence.
std::vector<Variant> DistinctVariants(const EventLog& log);

struct AnnotatedEvent {
  Event event;
  TransitionId transition;
  StateId source;
  StateId target;
};

// Every event of the log linked to the transition that represents it.
struct StateAnnotatedLog {
  // [trace][event], parallel to EventLog::traces.
  std::vector<std::vector<AnnotatedEvent>> traces;

  size_t EventCount() const;
};

// Fails with FailedPrecondition if some trace's variant is not accepted,
// which means the automaton was built from a different log.
absl::StatusOr<StateAnnotatedLog> Annotate(const EventLog& log,
                                           const Dafsa& dafsa);

// Event count per transition, indexed by TransitionId.
class ContingencyTable {
 public:
  explicit ContingencyTable(std::vector<int64_t> counts)
      : counts_(std::move(counts)) {}

  int64_t count(TransitionId t) const { return counts_[t]; }
  size_t size() const { return counts_.size(); }
  int64_t Total() const;
  const std::vector<int64_t>& counts() const { return counts_; }

  friend bool operator==(const ContingencyTable&,
                         const ContingencyTable&) = default;

 private:
  std::vector<int64_t> counts_;
};

ContingencyTable Contingency(const StateAnnotatedLog& annotated,
                             int num_transitions);

// Maps each transition to the case variants whose accepting path uses it.
struct TransitionVariantLookup {
  struct VariantEntry {
    Variant labels;
    std::vector<TransitionId> path;
    // Indices into EventLog::traces of the cases with this variant.
    std::vector<size_t> cases;
  };
  std::vector<VariantEntry> variants;
  // [transition] -> indices into `variants`, ascending.
  std::vector<std::vector<size_t>> by_transition;
};

TransitionVariantLookup BuildLookup(const StateAnnotatedLog& annotated,
                                    const Dafsa& dafsa);

}  // namespace dplog

#endif  // DPLOG_DAFSA_H_
