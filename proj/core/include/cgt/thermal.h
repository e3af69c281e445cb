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

#ifndef CGT_THERMAL_H_
#define CGT_THERMAL_H_

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgt/dyadic.h"
#include "cgt/game.h"
#include "cgt/trajectory.h"

namespace cgt {

struct StopPair {
  Dyadic left;
  Dyadic right;
  friend bool operator==(const StopPair&, const StopPair&) = default;
};

// Exact thermograph. `left` and `right` are the walls as functions of t on
// [-1, inf); both are constant (= mast) from `temperature` on.
struct Thermograph {
  Dyadic temperature;
  Dyadic mast;
  Trajectory left;
  Trajectory right;

  Dyadic LeftAt(const Dyadic& t) const { return left.At(t); }
  Dyadic RightAt(const Dyadic& t) const { return right.At(t); }
  // Breakpoints on [-1, temperature], ending at the mast.
  std::vector<WallPoint> LeftWall() const { return left.PointsUpTo(temperature); }
  std::vector<WallPoint> RightWall() const {
    return right.PointsUpTo(temperature);
  }
};

enum class SegmentKind { kVertical, kOblique };

// One wall of a thermic version split at its turning points in [0, t(G)].
struct WallDecomposition {
  std::vector<Dyadic> turning_points;   // t_0 = 0 < ... < t_k = t(G)
  std::vector<SegmentKind> segments;    // segments[i] spans [t_i, t_i+1]
  Dyadic vertical_total;
  Dyadic oblique_total;
};

struct ThermicPair {
  GameHandle left;
  GameHandle right;
  friend bool operator==(const ThermicPair&, const ThermicPair&) = default;
};

class NotHotError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class WrongShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thermal analysis over a GameStore. Results are memoized per canonical
// form; instances are safe to share between threads.
class Thermal {
 public:
  explicit Thermal(GameStore& store);
  ~Thermal();
  Thermal(const Thermal&) = delete;
  Thermal& operator=(const Thermal&) = delete;

  GameStore& store() { return store_; }

  StopPair Stops(GameHandle g);
  // LS - RS.
  Dyadic Ell(GameHandle g);
  bool IsHot(GameHandle g);
  // LS == RS == 0.
  bool IsInfinitesimal(GameHandle g);

  // G cooled by t; canonical. Throws std::domain_error for t < -1.
  GameHandle Cool(GameHandle g, const Dyadic& t);

  std::shared_ptr<const Thermograph> ThermographOf(GameHandle g);
  Dyadic Temperature(GameHandle g) { return ThermographOf(g)->temperature; }
  Dyadic Mean(GameHandle g) { return ThermographOf(g)->mast; }

  // Pairs (G^L, G^R) of literal options of g with t({G^L|G^R}) = t(g).
  std::vector<ThermicPair> ThermicVersions(GameHandle g);

  // g must have exactly one option on each side and be hot.
  std::pair<WallDecomposition, WallDecomposition> Decompose(GameHandle g);

  // l(H) + l(g)/2, H the thermic option on the side with more vertical
  // wall, using the first thermic pair of g.
  Dyadic TempUpperBound(GameHandle g);
  Dyadic TempUpperBound(GameHandle g, const ThermicPair& pair);

 private:
  struct Impl;

  StopPair StopsCanonical(GameHandle c);
  GameHandle CoolCanonical(GameHandle c, const Dyadic& t);
  std::shared_ptr<const Thermograph> ThermographCanonical(GameHandle c);

  GameStore& store_;
  std::unique_ptr<Impl> impl_;
};

// {"temperature": "...", "mast": "...", "left_wall": [[t, x], ...], ...}
// with exact values as "p/2^q" strings.
std::string ThermographJson(const Thermograph& thermograph);

// Standalone SVG. Positive x is drawn to the left; the mast is a dashed
// vertical ray above the temperature.
std::string ThermographSvg(const Thermograph& thermograph);

}  // namespace cgt

#endif  // CGT_THERMAL_H_
