// Copyright 2026 The cgtherm Authors.
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

#ifndef CGT_BOUNDS_H_
#define CGT_BOUNDS_H_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgt/dyadic.h"
#include "cgt/game.h"
#include "cgt/thermal.h"

namespace cgt {

// Outcome of checking G^L - G - K + eps <= 0 for every Left option G^L.
struct WitnessReport {
  GameHandle subject;
  Dyadic k;
  GameHandle epsilon;
  bool holds = false;
  std::optional<GameHandle> failing_option;
  Dyadic ell;  // l(subject), for cross-checking holds => ell <= k
};

struct ClassScanReport {
  std::string label;
  std::size_t count = 0;
  Dyadic max_ell;          // K
  Dyadic max_option_ell;   // J
  Dyadic bp_bound;         // K/2 + J
  Dyadic max_temperature;
  bool bound_holds = false;
};

struct TightnessEntry {
  GameHandle game;
  Dyadic temperature;
  Dyadic expected;  // 9 - 3/2^n
};

class CeilingExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyClassError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// K/2 + J. Throws std::domain_error on negative input.
Dyadic BpBound(const Dyadic& j, const Dyadic& k);

class BoundsLab {
 public:
  explicit BoundsLab(Thermal& thermal);

  // Left options are taken from the literal node `g`. Throws
  // std::domain_error unless eps has stops (0, 0) and k >= 0.
  WitnessReport ConfusionWitness(GameHandle g, const Dyadic& k,
                                 GameHandle eps);

  // Least multiple of `step` in [0, ceiling] at which the witness holds.
  // Gallops then bisects; if a spot check contradicts monotonicity in K the
  // answer is recomputed by a linear scan.
  Dyadic MinimalConfusionK(GameHandle g, const Dyadic& step, GameHandle eps,
                           const Dyadic& ceiling = Dyadic(64));

  // J is taken over the literal options of the given positions.
  ClassScanReport ClassScan(std::span<const GameHandle> positions,
                            const std::string& label);

  // G_0 = +-{9|3}, G_1 = +-{{15|9}|3}, ...; entries 0..n.
  std::vector<TightnessEntry> TightnessSequence(int n);

  // Number of linear-scan fallbacks taken by MinimalConfusionK.
  std::size_t fallbacks() const { return fallbacks_; }

 private:
  Thermal& thermal_;
  GameStore& store_;
  std::size_t fallbacks_ = 0;
};

}  // namespace cgt

#endif  // CGT_BOUNDS_H_
