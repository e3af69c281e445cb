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

#ifndef CGT_RANDOM_GAMES_H_
#define CGT_RANDOM_GAMES_H_

#include <random>

#include "cgt/game.h"

namespace cgt {

struct RandomGameParams {
  int depth = 3;
  int max_options = 3;
  // Leaves are integers in [-leaf_range, leaf_range] or halves thereof.
  int leaf_range = 3;
};

// Literal (non-canonical) game tree of height at most params.depth.
GameHandle RandomGame(GameStore& store, std::mt19937_64& rng,
                      const RandomGameParams& params = {});

}  // namespace cgt

#endif  // CGT_RANDOM_GAMES_H_
