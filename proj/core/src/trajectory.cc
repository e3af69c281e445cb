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

#include "cgt/trajectory.h"

#include <algorithm>
#include <stdexcept>

namespace cgt {
namespace {

const Dyadic kMinusOne(-1);

std::vector<Dyadic> MergedBreaks(const Trajectory& a, const Trajectory& b) {
  std::vector<Dyadic> ts;
  ts.reserve(a.points().size() + b.points().size());
  for (const WallPoint& p : a.points()) ts.push_back(p.t);
  for (const WallPoint& p : b.points()) ts.push_back(p.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

}  // namespace

Trajectory::Trajectory(std::vector<WallPoint> points, std::vector<int> slopes)
    : points_(std::move(points)), slopes_(std::move(slopes)) {
  Simplify();
}

Trajectory Trajectory::Constant(const Dyadic& x) {
  return Trajectory({{kMinusOne, x}}, {0});
}

Trajectory Trajectory::FromPoints(std::vector<WallPoint> points,
                                  int final_slope) {
  if (points.empty() || points.front().t != kMinusOne) {
    throw std::invalid_argument("trajectory must start at t = -1");
  }
  std::vector<int> slopes;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    Dyadic dt = points[i + 1].t - points[i].t;
    Dyadic dx = points[i + 1].x - points[i].x;
    if (dt.Sign() <= 0) {
      throw std::invalid_argument("trajectory breakpoints must increase");
    }
    std::optional<int> slope;
    for (int s = -4; s <= 4 && !slope; ++s) {
      if (dt * s == dx) slope = s;
    }
    if (!slope) throw std::invalid_argument("trajectory slope not integral");
    slopes.push_back(*slope);
  }
  slopes.push_back(final_slope);
  return Trajectory(std::move(points), std::move(slopes));
}

std::size_t Trajectory::SegmentIndex(const Dyadic& t) const {
  if (t < kMinusOne) throw std::domain_error("trajectory evaluated below -1");
  auto it = std::upper_bound(
      points_.begin(), points_.end(), t,
      [](const Dyadic& value, const WallPoint& p) { return value < p.t; });
  return static_cast<std::size_t>(it - points_.begin()) - 1;
}

Dyadic Trajectory::At(const Dyadic& t) const {
  std::size_t i = SegmentIndex(t);
  return points_[i].x + (t - points_[i].t) * slopes_[i];
}

int Trajectory::SlopeAt(const Dyadic& t) const {
  return slopes_[SegmentIndex(t)];
}

Trajectory Trajectory::Sheared(int delta) const {
  std::vector<WallPoint> points = points_;
  std::vector<int> slopes = slopes_;
  for (WallPoint& p : points) p.x += p.t * delta;
  for (int& s : slopes) s += delta;
  return Trajectory(std::move(points), std::move(slopes));
}

Trajectory Trajectory::FrozenAt(const Dyadic& end) const {
  std::vector<WallPoint> points = PointsUpTo(end);
  std::vector<int> slopes;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    slopes.push_back(SlopeAt(points[i].t));
  }
  slopes.push_back(0);
  if (points.size() >= 2 && points[points.size() - 2].t == end) {
    points.pop_back();
    slopes.pop_back();
    slopes.back() = 0;
  }
  return Trajectory(std::move(points), std::move(slopes));
}

std::vector<WallPoint> Trajectory::PointsUpTo(const Dyadic& end) const {
  std::vector<WallPoint> out;
  for (const WallPoint& p : points_) {
    if (p.t < end) out.push_back(p);
  }
  out.push_back({end, At(end)});
  return out;
}

void Trajectory::Simplify() {
  std::vector<WallPoint> points;
  std::vector<int> slopes;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!slopes.empty() && slopes.back() == slopes_[i]) continue;
    points.push_back(points_[i]);
    slopes.push_back(slopes_[i]);
  }
  points_ = std::move(points);
  slopes_ = std::move(slopes);
}

Trajectory Trajectory::Combine(const Trajectory& a, const Trajectory& b,
                               bool take_max) {
  std::vector<Dyadic> breaks = MergedBreaks(a, b);
  std::vector<Dyadic> ts;
  for (std::size_t j = 0; j < breaks.size(); ++j) {
    const Dyadic& t0 = breaks[j];
    ts.push_back(t0);
    Dyadic d0 = a.At(t0) - b.At(t0);
    int sa = a.SlopeAt(t0), sb = b.SlopeAt(t0);
    bool crosses;
    if (j + 1 < breaks.size()) {
      Dyadic d1 = a.At(breaks[j + 1]) - b.At(breaks[j + 1]);
      crosses = d0.Sign() * d1.Sign() < 0;
    } else {
      crosses = (d0.Sign() > 0 && sa < sb) || (d0.Sign() < 0 && sb < sa);
    }
    if (crosses) ts.push_back(t0 + d0.DividedBy(sb - sa));
  }
  auto pick = [&](const Dyadic& t) -> const Trajectory& {
    bool a_wins = take_max ? !(a.At(t) < b.At(t)) : !(b.At(t) < a.At(t));
    return a_wins ? a : b;
  };
  std::vector<WallPoint> points;
  std::vector<int> slopes;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Dyadic& t = ts[i];
    points.push_back({t, pick(t).At(t)});
    Dyadic probe = i + 1 < ts.size() ? (t + ts[i + 1]).Half() : t + Dyadic(1);
    slopes.push_back(pick(probe).SlopeAt(probe));
  }
  return Trajectory(std::move(points), std::move(slopes));
}

Trajectory Trajectory::Max(const Trajectory& a, const Trajectory& b) {
  return Combine(a, b, true);
}

Trajectory Trajectory::Min(const Trajectory& a, const Trajectory& b) {
  return Combine(a, b, false);
}

std::optional<Dyadic> Trajectory::FirstMeet(const Trajectory& upper,
                                            const Trajectory& lower) {
  std::vector<Dyadic> breaks = MergedBreaks(upper, lower);
  auto gap = [&](const Dyadic& t) { return upper.At(t) - lower.At(t); };
  if (gap(breaks.front()).Sign() <= 0) return breaks.front();
  for (std::size_t j = 0; j < breaks.size(); ++j) {
    const Dyadic& t0 = breaks[j];
    Dyadic d0 = gap(t0);
    int closing = lower.SlopeAt(t0) - upper.SlopeAt(t0);
    if (j + 1 < breaks.size()) {
      if (gap(breaks[j + 1]).Sign() <= 0) return t0 + d0.DividedBy(closing);
    } else if (closing > 0) {
      return t0 + d0.DividedBy(closing);
    }
  }
  return std::nullopt;
}

}  // namespace cgt
