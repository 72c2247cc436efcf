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

// Calibration of differential-privacy parameters from a bound on the
// attacker's guessing advantage.
//
// For an instance whose value an attacker can already guess with prior
// probability P, the largest epsilon that keeps the posterior success within
// P + delta is
//
//   epsilon = -ln( P / (1 - P) * (1 / (delta + P) - 1) ) / r
//
// where r is the width of the value range (1 on normalized data). Transition
// counts use the worst-case prior P = (1 - delta) / 2; event times use a
// prior estimated from the empirical distribution of their transition group.

#ifndef DPLOG_RISK_H_
#define DPLOG_RISK_H_

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "dplog/dafsa.h"
#include "dplog/event_log.h"
#include "dplog/random.h"

namespace dplog {

inline constexpr double kPriorFloor = 1e-6;
inline constexpr double kPriorCeiling = 1.0 - 1e-6;
inline constexpr double kDefaultEpsilonCap = 50.0;
// One added or removed case changes any transition count by at most one.
inline constexpr double kCountSensitivity = 1.0;

struct PrivacyConfig {
  double delta = 0.2;
  double precision = 0.1;
  TimeUnit time_unit = TimeUnit::kHours;
  uint64_t seed = 0;
  double epsilon_cap = kDefaultEpsilonCap;

  absl::Status Validate() const;
};

// A privacy parameter, or the marker that no noise is needed because the
// advantage bound cannot be exceeded.
class Epsilon {
 public:
  static Epsilon NoNoise() { return Epsilon(0.0); }
  // `value` must be positive.
  static Epsilon Finite(double value) { return Epsilon(value); }

  bool no_noise() const { return value_ == 0.0; }
  // Only meaningful when !no_noise().
  double value() const { return value_; }
  // Splits the budget over k correlated releases.
  Epsilon DividedBy(int k) const {
    return no_noise() ? *this : Epsilon(value_ / k);
  }

  friend bool operator==(const Epsilon&, const Epsilon&) = default;

 private:
  explicit Epsilon(double value) : value_(value) {}
  double value_;
};

// (1 - delta) / 2.
absl::StatusOr<double> WorstCasePrior(double delta);

// Right-continuous step CDF over a sample.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> values);
  // Fraction of values <= x.
  double operator()(double x) const;
  size_t size() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

// CDF(value + precision) - CDF(value - precision) over `group`, clamped to
// [kPriorFloor, kPriorCeiling].
absl::StatusOr<double> EmpiricalPrior(absl::Span<const double> group,
                                      double value, double precision);
double EmpiricalPrior(const EmpiricalCdf& cdf, double value, double precision);

absl::StatusOr<Epsilon> EpsilonFromAdvantage(
    double prior, double delta, double r = 1.0,
    double epsilon_cap = kDefaultEpsilonCap);

// Epsilon shared by all transition counts.
absl::StatusOr<double> CountEpsilon(const PrivacyConfig& config);

struct EpsilonPlan {
  double count_epsilon = 0;
  // [trace][event], parallel to the log the plan was computed for.
  std::vector<std::vector<Epsilon>> time_epsilon;
  std::vector<std::vector<double>> prior;
  // Un-normalized time range the normalized values were divided by.
  double r_max = 1.0;

  // A plan for a derived log whose i-th trace copies trace source[i].
  EpsilonPlan Select(absl::Span<const size_t> source) const;
  size_t NoNoiseCount() const;
};

// Groups every event with all events annotated by the same transition and
// derives its prior from that group's normalized relative times.
absl::StatusOr<EpsilonPlan> TimeEpsilons(const StateAnnotatedLog& annotated,
                                         const RelativeTimeView& times,
                                         const PrivacyConfig& config);

// Inverse-CDF transform of u in (0, 1) to a zero-mean Laplace variate.
double LaplaceFromUniform(double u, double scale);
double SampleLaplace(double scale, RandomStream& rng);

// Publishing only non-negative count noise lets an attacker win whenever
// the draw lands in [0, sensitivity), which happens with probability
// 1 - exp(-epsilon / sensitivity).
struct ResidualRisk {
  double count_epsilon = 0;
  // Indexed by TransitionId.
  std::vector<double> extra_prob;
};

ResidualRisk ComputeResidualRisk(double count_epsilon, int num_transitions);
double ResidualRiskTerm(double count_epsilon);

}  // namespace dplog

#endif  // DPLOG_RISK_H_
