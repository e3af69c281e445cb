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

#ifndef CGT_TRAJECTORY_H_
#define CGT_TRAJECTORY_H_

#include <optional>
#include <vector>

#include "cgt/dyadic.h"

namespace cgt {

struct WallPoint {
  Dyadic t;
  Dyadic x;
  friend bool operator==(const WallPoint&, const WallPoint&) = default;
};

// Continuous piecewise-linear x(t) on [-1, inf) with integer slopes and
// dyadic breakpoints. The first breakpoint is always t = -1; the last
// segment extends to infinity. Consecutive segments never share a slope.
class Trajectory {
 public:
  Trajectory() : Trajectory(Constant(Dyadic(0))) {}

  static Trajectory Constant(const Dyadic& x);
  // Breakpoints must start at t = -1 and strictly increase; slopes between
  // them are recovered and must be integers in [-4, 4].
  static Trajectory FromPoints(std::vector<WallPoint> points, int final_slope);

  // Throws std::domain_error for t < -1.
  Dyadic At(const Dyadic& t) const;
  // Right-hand slope at t.
  int SlopeAt(const Dyadic& t) const;

  // x(t) + delta * t.
  Trajectory Sheared(int delta) const;
  // Same values up to `end`, constant afterwards.
  Trajectory FrozenAt(const Dyadic& end) const;

  static Trajectory Max(const Trajectory& a, const Trajectory& b);
  static Trajectory Min(const Trajectory& a, const Trajectory& b);

  // Smallest t >= -1 with upper(t) <= lower(t), if any.
  static std::optional<Dyadic> FirstMeet(const Trajectory& upper,
                                         const Trajectory& lower);

  // Breakpoints in [-1, end) followed by (end, x(end)).
  std::vector<WallPoint> PointsUpTo(const Dyadic& end) const;

  const std::vector<WallPoint>& points() const { return points_; }
  // slopes()[i] holds on [points()[i].t, points()[i + 1].t).
  const std::vector<int>& slopes() const { return slopes_; }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  Trajectory(std::vector<WallPoint> points, std::vector<int> slopes);
  std::size_t SegmentIndex(const Dyadic& t) const;
  void Simplify();
  static Trajectory Combine(const Trajectory& a, const Trajectory& b,
                            bool take_max);

  std::vector<WallPoint> points_;
  std::vector<int> slopes_;
};

}  // namespace cgt

#endif  // CGT_TRAJECTORY_H_
