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

#include "dplog/time_anonymizer.h"

#include <algorithm>
#include <cmath>

#include "dplog/random.h"

namespace dplog {

EpsilonPlan AdjustEpsilons(const EpsilonPlan& plan,
                           absl::Span<const int> group_size) {
  EpsilonPlan out = plan;
  for (size_t i = 0; i < out.time_epsilon.size(); ++i) {
    const int k = i < group_size.size() ? group_size[i] : 1;
    for (Epsilon& e : out.time_epsilon[i]) e = e.DividedBy(k);
  }
  return out;
}

NoisedLog InjectTimeNoise(const EventLog& log, const RelativeTimeView& times,
                          const EpsilonPlan& plan, uint64_t seed,
                          NoiseOptions options) {
  NoisedLog out;
  out.log = log;
  const size_t m = log.traces.size();
  out.applied_epsilon.resize(m);
  out.noise_magnitude.resize(m);
  out.rel_time.resize(m);
  const absl::Duration unit = UnitDuration(times.unit);

  for (size_t i = 0; i < m; ++i) {
    Trace& trace = out.log.traces[i];
    if (trace.events.empty()) continue;
    RandomStream rng = RandomStream::Derive(seed, StreamKind::kTimeNoise, i);
    const absl::Time start = trace.events.front().timestamp;
    double previous = 0.0;
    for (size_t k = 0; k < trace.events.size(); ++k) {
      const Epsilon eps = plan.time_epsilon[i][k];
      const double original = times.rel_time[i][k];
      double noised = original;
      if (k == 0) {
        noised = 0.0;
      } else if (!eps.no_noise()) {
        const double norm =
            times.normalized[i][k] + SampleLaplace(1.0 / eps.value(), rng);
        noised = std::max(0.0, norm * times.r_max);
      }
      if (options.monotonic) noised = std::max(noised, previous);
      previous = noised;
      if (noised != original) {
        trace.events[k].timestamp =
            TruncateToMillis(start + noised * unit);
      }
      out.applied_epsilon[i].push_back(eps);
      out.noise_magnitude[i].push_back(noised - original);
      out.rel_time[i].push_back(noised);
    }
  }
  return out;
}

}  // namespace dplog
