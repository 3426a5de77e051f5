/*
 * Copyright 2026 The pmuspill-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PMUSPILL_RNG_H_
#define PMUSPILL_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace pmuspill {

// Deterministic helpers. std::*_distribution output differs between standard
// library implementations, so everything that feeds reproducible results goes
// through these instead.

constexpr uint64_t SplitMix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr uint64_t Fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Mixes a seed into a stream id so that independent consumers of one user seed
// do not share a sequence.
constexpr uint64_t DeriveSeed(uint64_t seed, uint64_t stream) {
  return SplitMix64(seed ^ SplitMix64(stream + 0x632be59bd9b4e019ULL));
}

// Maps a 64-bit value to [0, 1) using its top 53 bits.
constexpr double ToUnit(uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  uint64_t Below(uint64_t n) {
    // Rejection keeps the result exactly uniform.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  double Unit() { return ToUnit(engine_()); }

  bool Bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return Unit() < p;
  }

  // Number of failures before the first success, success probability q.
  uint64_t Geometric(double q) {
    if (q <= 0.0) return 0;
    uint64_t n = 0;
    while (!Bernoulli(q)) ++n;
    return n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pmuspill

#endif  // PMUSPILL_RNG_H_
