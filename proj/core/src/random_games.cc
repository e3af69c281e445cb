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

#include "cgt/random_games.h"

#include <vector>

namespace cgt {
namespace {

GameHandle Build(GameStore& store, std::mt19937_64& rng,
                 const RandomGameParams& params, int depth) {
  std::uniform_int_distribution<int> coin(0, 3);
  if (depth == 0 || coin(rng) == 0) {
    std::uniform_int_distribution<int> leaf(-2 * params.leaf_range,
                                            2 * params.leaf_range);
    return store.Number(Dyadic(leaf(rng)).Half());
  }
  std::uniform_int_distribution<int> count(0, params.max_options);
  std::vector<GameHandle> left, right;
  for (int i = count(rng); i > 0; --i) {
    left.push_back(Build(store, rng, params, depth - 1));
  }
  for (int i = count(rng); i > 0; --i) {
    right.push_back(Build(store, rng, params, depth - 1));
  }
  return store.Make(left, right);
}

}  // namespace

GameHandle RandomGame(GameStore& store, std::mt19937_64& rng,
                      const RandomGameParams& params) {
  return Build(store, rng, params, params.depth);
}

}  // namespace cgt
