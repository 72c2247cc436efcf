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

#include "dplog/dafsa.h"

#include <algorithm>
#include <map>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace dplog {
namespace {

// Mutable automaton used during construction. States removed by merging are
// marked dead and dropped when the result is compacted.
class Builder {
 public:
  Builder() { nodes_.emplace_back(); }

  void Add(const Variant& word) {
    int state = 0;
    size_t i = 0;
    for (; i < word.size(); ++i) {
      auto it = nodes_[state].edges.find(word[i]);
      if (it == nodes_[state].edges.end()) break;
      state = it->second;
    }
    if (!nodes_[state].edges.empty()) ReplaceOrRegister(state);
    for (; i < word.size(); ++i) {
      const int next = static_cast<int>(nodes_.size());
      nodes_.emplace_back();
      nodes_[state].edges.emplace(word[i], next);
      state = next;
    }
    nodes_[state].final = true;
  }

  void Finish() {
    if (!nodes_[0].edges.empty()) ReplaceOrRegister(0);
  }

  struct Node {
    bool final = false;
    bool dead = false;
    std::map<std::string, int> edges;
  };
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  using Signature = std::pair<bool, std::vector<std::pair<std::string, int>>>;

  // Minimizes the most recently added branch below `state`. Sorted input
  // guarantees that branch hangs off the lexicographically last edge.
  void ReplaceOrRegister(int state) {
    auto last = std::prev(nodes_[state].edges.end());
    const int child = last->second;
    if (!nodes_[child].edges.empty()) ReplaceOrRegister(child);
    Signature sig{nodes_[child].final,
                  {nodes_[child].edges.begin(), nodes_[child].edges.end()}};
    auto [it, inserted] = registry_.try_emplace(std::move(sig), child);
    if (!inserted) {
      last->second = it->second;
      nodes_[child].dead = true;
    }
  }

  std::vector<Node> nodes_;
  std::map<Signature, int> registry_;
};

}  // namespace

absl::StatusOr<Dafsa> Dafsa::Build(std::vector<Variant> variants) {
  if (variants.empty()) {
    return absl::InvalidArgumentError("cannot build a DAFSA from no variants");
  }
  for (const Variant& v : variants) {
    if (v.empty()) {
      return absl::InvalidArgumentError("case variants must be non-empty");
    }
  }
  std::sort(variants.begin(), variants.end());
  variants.erase(std::unique(variants.begin(), variants.end()),
                 variants.end());

  Builder builder;
  for (const Variant& v : variants) builder.Add(v);
  builder.Finish();

  const auto& nodes = builder.nodes();
  std::vector<StateId> renumber(nodes.size(), -1);
  StateId next = 0;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].dead) renumber[i] = next++;
  }

  Dafsa dafsa;
  dafsa.final_.resize(next);
  dafsa.out_.resize(next);
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].dead) continue;
    const StateId s = renumber[i];
    dafsa.final_[s] = nodes[i].final;
    for (const auto& [label, target] : nodes[i].edges) {
      const TransitionId id = dafsa.num_transitions();
      dafsa.transitions_.push_back(Transition{s, label, renumber[target]});
      dafsa.out_[s].emplace(label, id);
    }
  }
  return dafsa;
}

std::optional<TransitionId> Dafsa::Step(StateId s,
                                        const std::string& label) const {
  auto it = out_[s].find(label);
  if (it == out_[s].end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<TransitionId>> Dafsa::Path(
    absl::Span<const std::string> word) const {
  std::vector<TransitionId> path;
  path.reserve(word.size());
  StateId state = initial();
  for (const std::string& label : word) {
    std::optional<TransitionId> t = Step(state, label);
    if (!t) return std::nullopt;
    path.push_back(*t);
    state = transitions_[*t].target;
  }
  if (!final_[state]) return std::nullopt;
  return path;
}

std::vector<Variant> Dafsa::Language() const {
  std::vector<Variant> words;
  Variant prefix;
  auto visit = [&](auto&& self, StateId s) -> void {
    if (final_[s] && !prefix.empty()) words.push_back(prefix);
    for (const auto& [label, id] : out_[s]) {
      prefix.push_back(label);
      self(self, transitions_[id].target);
      prefix.pop_back();
    }
  };
  visit(visit, initial());
  return words;
}

std::string Dafsa::ToDot() const {
  std::string out = "digraph dafsa {\n  rankdir=LR;\n";
  for (StateId s = 0; s < num_states(); ++s) {
    absl::StrAppend(&out, "  s", s, " [shape=",
                    final_[s] ? "doublecircle" : "circle", "];\n");
  }
  for (const Transition& t : transitions_) {
    std::string label = t.label;
    // Graphviz string escaping.
    for (size_t pos = 0; (pos = label.find('"', pos)) != std::string::npos;
         pos += 2) {
      label.insert(pos, "\\");
    }
    absl::StrAppend(&out, "  s", t.source, " -> s", t.target, " [label=\"",
                    label, "\"];\n");
  }
  out.append("}\n");
  return out;
}

std::vector<Variant> DistinctVariants(const EventLog& log) {
  std::vector<Variant> out;
  absl::flat_hash_map<Variant, size_t> seen;
  for (const Trace& t : log.traces) {
    Variant v = t.Variant();
    if (seen.try_emplace(v, out.size()).second) out.push_back(std::move(v));
  }
  return out;
}

size_t StateAnnotatedLog::EventCount() const {
  size_t n = 0;
  for (const auto& t : traces) n += t.size();
  return n;
}

absl::StatusOr<StateAnnotatedLog> Annotate(const EventLog& log,
                                           const Dafsa& dafsa) {
  StateAnnotatedLog annotated;
  annotated.traces.reserve(log.traces.size());
  for (const Trace& trace : log.traces) {
    const Variant variant = trace.Variant();
    std::optional<std::vector<TransitionId>> path = dafsa.Path(variant);
    if (!path) {
      return absl::FailedPreconditionError(absl::StrCat(
          "variant <", absl::StrJoin(variant, ","), "> of case '",
          trace.case_id, "' is not accepted by the automaton"));
    }
    std::vector<AnnotatedEvent> events;
    events.reserve(trace.events.size());
    for (size_t k = 0; k < trace.events.size(); ++k) {
      const Transition& t = dafsa.transition((*path)[k]);
      events.push_back(
          AnnotatedEvent{trace.events[k], (*path)[k], t.source, t.target});
    }
    annotated.traces.push_back(std::move(events));
  }
  return annotated;
}

int64_t ContingencyTable::Total() const {
  int64_t total = 0;
  for (int64_t c : counts_) total += c;
  return total;
}

ContingencyTable Contingency(const StateAnnotatedLog& annotated,
                             int num_transitions) {
  std::vector<int64_t> counts(num_transitions, 0);
  for (const auto& trace : annotated.traces) {
    for (const AnnotatedEvent& e : trace) ++counts[e.transition];
  }
  return ContingencyTable(std::move(counts));
}

TransitionVariantLookup BuildLookup(const StateAnnotatedLog& annotated,
                                    const Dafsa& dafsa) {
  TransitionVariantLookup lookup;
  lookup.by_transition.resize(dafsa.num_transitions());
  absl::flat_hash_map<std::vector<TransitionId>, size_t> index;
  for (size_t i = 0; i < annotated.traces.size(); ++i) {
    const auto& trace = annotated.traces[i];
    std::vector<TransitionId> path;
    path.reserve(trace.size());
    for (const AnnotatedEvent& e : trace) path.push_back(e.transition);
    auto [it, inserted] = index.try_emplace(path, lookup.variants.size());
    if (inserted) {
      Variant labels;
      labels.reserve(trace.size());
      for (const AnnotatedEvent& e : trace) labels.push_back(e.event.activity);
      lookup.variants.push_back({std::move(labels), std::move(path), {}});
    }
    lookup.variants[it->second].cases.push_back(i);
  }
  for (size_t v = 0; v < lookup.variants.size(); ++v) {
    // Paths in an acyclic automaton never repeat a transition.
    for (TransitionId t : lookup.variants[v].path) {
      lookup.by_transition[t].push_back(v);
    }
  }
  return lookup;
}

}  // namespace dplog
