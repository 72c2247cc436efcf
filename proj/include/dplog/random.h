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

#ifndef DPLOG_RANDOM_H_
#define DPLOG_RANDOM_H_

#include <cstdint>
#include <limits>
#include <random>

namespace dplog {

// Purposes for which independent substreams are derived from the master
// seed. Values are part of the reproducibility contract; do not renumber.
enum class StreamKind : uint64_t {
  kCountNoise = 1,
  kOversample = 2,
  kCaseIds = 3,
  kShuffle = 4,
  kTimeNoise = 5,
};

// A seeded 64-bit generator. Substreams are keyed by (seed, kind, index)
// through SplitMix64 mixing, so results never depend on the order in which
// substreams are consumed.
class RandomStream {
 public:
  using result_type = uint64_t;

  explicit RandomStream(uint64_t seed) : engine_(Mix(seed)) {}

  static RandomStream Derive(uint64_t seed, StreamKind kind, uint64_t index) {
    uint64_t key = Mix(seed);
    key = Mix(key ^ Mix(static_cast<uint64_t>(kind) + 0x632be59bd9b4e019ULL));
    key = Mix(key ^ Mix(index + 0x8cb92ba72f3d8dd7ULL));
    return RandomStream(key);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return engine_(); }

  // Uniform on the open interval (0, 1).
  double UniformOpen01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // SplitMix64 finalizer.
  static constexpr uint64_t Mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dplog

#endif  // DPLOG_RANDOM_H_
