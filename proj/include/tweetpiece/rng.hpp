// Copyright 2026 The tweetpiece Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace tweetpiece {

// SplitMix64. Small, fast, and fully portable, which keeps randomized
// outputs byte-identical across platforms (the standard distributions are
// not specified tightly enough for that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n); n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // A decorrelated stream for (seed, index) pairs, so parallel example
  // generation is schedule-independent.
  static Rng for_stream(std::uint64_t seed, std::uint64_t index) {
    Rng mixer(seed);
    const std::uint64_t a = mixer.next_u64();
    Rng mixer2(index ^ 0xD1B54A32D192ED03ull);
    return Rng(a ^ mixer2.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace tweetpiece
