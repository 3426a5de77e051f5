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

#ifndef PMUSPILL_TESTS_NOISE_ORACLE_H_
#define PMUSPILL_TESTS_NOISE_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

namespace pmuspill::testing {

struct NoiseOracle {
  double round_conclusive = 0;
  double byte_accuracy = 0;
  // Lowest accuracy an implementation of the same model may show over
  // `sim_trials` leaks before the difference stops being sampling error.
  double bound = 0;
};

// Monte-Carlo model of one leak, independent of the simulator. A noiseless
// round always decodes. A spurious +1 lands in a uniformly random window;
// inside the secret's window it only widens the singleton gap, anywhere
// else it makes a second odd value and the round is inconclusive. The byte
// is recovered when at least one round is conclusive, since conclusive
// rounds can only name the secret.
inline NoiseOracle RunNoiseOracle(double p, int rounds, int domain,
                                  int trials, int sim_trials, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution spurious(p);
  std::uniform_int_distribution<int> window(0, domain - 1);
  uint64_t conclusive_rounds = 0;
  uint64_t recovered = 0;
  for (int t = 0; t < trials; ++t) {
    const int secret = window(rng);
    int conclusive = 0;
    for (int r = 0; r < rounds; ++r) {
      const bool hit = spurious(rng);
      if (!hit || window(rng) == secret) ++conclusive;
    }
    conclusive_rounds += conclusive;
    recovered += conclusive > 0;
  }
  NoiseOracle out;
  out.round_conclusive = static_cast<double>(conclusive_rounds) /
                         (static_cast<double>(trials) * rounds);
  out.byte_accuracy = static_cast<double>(recovered) / trials;
  const double a = out.byte_accuracy;
  const double var = std::max(a * (1 - a), 1.0 / sim_trials) / sim_trials;
  out.bound = a - 3.0 * std::sqrt(var);
  return out;
}

}  // namespace pmuspill::testing

#endif  // PMUSPILL_TESTS_NOISE_ORACLE_H_
