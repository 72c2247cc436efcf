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

#include "dplog/risk.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"

namespace dplog {
namespace {

bool InOpenUnit(double x) { return x > 0.0 && x < 1.0; }

}  // namespace

absl::Status PrivacyConfig::Validate() const {
  if (!InOpenUnit(delta)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in (0, 1), got ", delta));
  }
  if (!(precision > 0.0 && precision <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("precision must lie in (0, 1], got ", precision));
  }
  if (!(epsilon_cap > 0.0) || !std::isfinite(epsilon_cap)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon cap must be positive, got ", epsilon_cap));
  }
  return absl::OkStatus();
}

absl::StatusOr<double> WorstCasePrior(double delta) {
  if (!InOpenUnit(delta)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in (0, 1), got ", delta));
  }
  return (1.0 - delta) / 2.0;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> values)
    : sorted_(std::move(values)) {
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double EmpiricalPrior(const EmpiricalCdf& cdf, double value,
                      double precision) {
  const double raw = cdf(value + precision) - cdf(value - precision);
  return std::clamp(raw, kPriorFloor, kPriorCeiling);
}

absl::StatusOr<double> EmpiricalPrior(absl::Span<const double> group,
                                      double value, double precision) {
  if (group.empty()) {
    return absl::InvalidArgumentError("empirical prior of an empty group");
  }
  for (double v : group) {
    if (!(v >= 0.0 && v <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("group value ", v, " is not normalized to [0, 1]"));
    }
  }
  return EmpiricalPrior(EmpiricalCdf({group.begin(), group.end()}), value,
                        precision);
}

absl::StatusOr<Epsilon> EpsilonFromAdvantage(double prior, double delta,
                                             double r, double epsilon_cap) {
  if (!InOpenUnit(prior)) {
    return absl::InvalidArgumentError(
        absl::StrCat("prior must lie in (0, 1), got ", prior));
  }
  if (!InOpenUnit(delta)) {
    return absl::InvalidArgumentError(
        absl::StrCat("delta must lie in (0, 1), got ", delta));
  }
  if (!(r > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("range r must be positive, got ", r));
  }
  if (!(epsilon_cap > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon cap must be positive, got ", epsilon_cap));
  }
  if (prior + delta >= 1.0) return Epsilon::NoNoise();
  // -ln(P/(1-P) * (1-delta-P)/(delta+P)), expanded into a sum of logs so
  // that small factors keep full relative precision.
  const double eps = (std::log1p(-prior) - std::log(prior) +
                      std::log(delta + prior) - std::log1p(-(delta + prior))) /
                     r;
  return Epsilon::Finite(std::min(eps, epsilon_cap));
}

absl::StatusOr<double> CountEpsilon(const PrivacyConfig& config) {
  absl::StatusOr<double> prior = WorstCasePrior(config.delta);
  if (!prior.ok()) return prior.status();
  // prior + delta = (1 + delta) / 2 < 1, so the result is always finite.
  absl::StatusOr<Epsilon> eps =
      EpsilonFromAdvantage(*prior, config.delta, 1.0, config.epsilon_cap);
  if (!eps.ok()) return eps.status();
  return eps->value();
}

EpsilonPlan EpsilonPlan::Select(absl::Span<const size_t> source) const {
  EpsilonPlan out;
  out.count_epsilon = count_epsilon;
  out.r_max = r_max;
  out.time_epsilon.reserve(source.size());
  out.prior.reserve(source.size());
  for (size_t s : source) {
    out.time_epsilon.push_back(time_epsilon[s]);
    out.prior.push_back(prior[s]);
  }
  return out;
}

size_t EpsilonPlan::NoNoiseCount() const {
  size_t n = 0;
  for (const auto& trace : time_epsilon) {
    for (const Epsilon& e : trace) n += e.no_noise() ? 1 : 0;
  }
  return n;
}

absl::StatusOr<EpsilonPlan> TimeEpsilons(const StateAnnotatedLog& annotated,
                                         const RelativeTimeView& times,
                                         const PrivacyConfig& config) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  if (annotated.traces.size() != times.normalized.size()) {
    return absl::InvalidArgumentError(
        "annotation and relative times cover different traces");
  }
  absl::StatusOr<double> count_eps = CountEpsilon(config);
  if (!count_eps.ok()) return count_eps.status();

  absl::flat_hash_map<TransitionId, std::vector<double>> groups;
  for (size_t i = 0; i < annotated.traces.size(); ++i) {
    if (annotated.traces[i].size() != times.normalized[i].size()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "trace ", i, ": annotation and relative times differ in length"));
    }
    for (size_t k = 0; k < annotated.traces[i].size(); ++k) {
      groups[annotated.traces[i][k].transition].push_back(
          times.normalized[i][k]);
    }
  }
  absl::flat_hash_map<TransitionId, EmpiricalCdf> cdfs;
  for (auto& [t, values] : groups) cdfs.emplace(t, std::move(values));

  EpsilonPlan plan;
  plan.count_epsilon = *count_eps;
  plan.r_max = times.r_max;
  plan.time_epsilon.resize(annotated.traces.size());
  plan.prior.resize(annotated.traces.size());
  for (size_t i = 0; i < annotated.traces.size(); ++i) {
    for (size_t k = 0; k < annotated.traces[i].size(); ++k) {
      const EmpiricalCdf& cdf = cdfs.at(annotated.traces[i][k].transition);
      const double prior =
          EmpiricalPrior(cdf, times.normalized[i][k], config.precision);
      // Normalized times have unit range, so r = 1.
      absl::StatusOr<Epsilon> eps =
          EpsilonFromAdvantage(prior, config.delta, 1.0, config.epsilon_cap);
      if (!eps.ok()) return eps.status();
      plan.prior[i].push_back(prior);
      plan.time_epsilon[i].push_back(*eps);
    }
  }
  return plan;
}

double LaplaceFromUniform(double u, double scale) {
  const double centered = u - 0.5;
  const double sign = centered < 0 ? -1.0 : (centered > 0 ? 1.0 : 0.0);
  return -scale * sign * std::log1p(-2.0 * std::abs(centered));
}

double SampleLaplace(double scale, RandomStream& rng) {
  return LaplaceFromUniform(rng.UniformOpen01(), scale);
}

double ResidualRiskTerm(double count_epsilon) {
  return -std::expm1(-count_epsilon / kCountSensitivity);
}

ResidualRisk ComputeResidualRisk(double count_epsilon, int num_transitions) {
  return ResidualRisk{
      count_epsilon,
      std::vector<double>(num_transitions, ResidualRiskTerm(count_epsilon))};
}

}  // namespace dplog
