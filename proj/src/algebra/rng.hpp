/*
   Copyright 2026 The isogram authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ISOGRAM_ALGEBRA_RNG_HPP
#define ISOGRAM_ALGEBRA_RNG_HPP

#include <cstdint>

namespace isogram::algebra {

/// Counter-based generator: the value stream is a pure function of
/// (seed, stream, counter), so any sample can be replayed from its index.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream), counter_(0) {}

  std::uint64_t next() { return at(counter_++); }

  /// Uniform value in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
      std::uint64_t v = next();
      if (v < limit) return v % bound;
    }
  }

  std::uint64_t at(std::uint64_t counter) const {
    return mix(seed_ ^ mix(stream_ ^ mix(counter)));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_;
};

// Stream ids keep independent sampling tasks on disjoint substreams.
namespace streams {
constexpr std::uint64_t kSpanPoints = 0x01;
constexpr std::uint64_t kDimTrials = 0x02;
constexpr std::uint64_t kInterpPool = 0x03;
constexpr std::uint64_t kIsotropic = 0x04;
constexpr std::uint64_t kSamples = 0x05;
constexpr std::uint64_t kPlucker = 0x06;
constexpr std::uint64_t kHoldout = 0x07;
}  // namespace streams

}  // namespace isogram::algebra

#endif
