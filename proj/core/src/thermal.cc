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

#include "cgt/thermal.h"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "sharded_map.h"

namespace cgt {
namespace {

struct CoolKey {
  GameId id;
  Dyadic t;
  friend bool operator==(const CoolKey&, const CoolKey&) = default;
};

struct CoolKeyHash {
  std::size_t operator()(const CoolKey& k) const {
    return k.t.Hash() * 0x9e3779b97f4a7c15ULL + k.id;
  }
};

}  // namespace

struct Thermal::Impl {
  internal::ShardedMap<GameId, StopPair> stops;
  internal::ShardedMap<GameId, std::shared_ptr<const Thermograph>> graphs;
  internal::ShardedMap<CoolKey, GameHandle, CoolKeyHash> cooled;
};

Thermal::Thermal(GameStore& store)
    : store_(store), impl_(std::make_unique<Impl>()) {}

Thermal::~Thermal() = default;

StopPair Thermal::Stops(GameHandle g) {
  return StopsCanonical(store_.Canonical(g));
}

StopPair Thermal::StopsCanonical(GameHandle c) {
  if (auto hit = impl_->stops.Find(c.id())) return *hit;
  StopPair result;
  if (std::optional<Dyadic> x = store_.NumberValue(c)) {
    result = {*x, *x};
  } else {
    std::vector<GameHandle> left = store_.LeftOptions(c);
    std::vector<GameHandle> right = store_.RightOptions(c);
    result.left = StopsCanonical(left.front()).right;
    for (GameHandle gl : left) {
      result.left = Max(result.left, StopsCanonical(gl).right);
    }
    result.right = StopsCanonical(right.front()).left;
    for (GameHandle gr : right) {
      result.right = Min(result.right, StopsCanonical(gr).left);
    }
  }
  impl_->stops.Insert(c.id(), result);
  return result;
}

Dyadic Thermal::Ell(GameHandle g) {
  StopPair s = Stops(g);
  return s.left - s.right;
}

bool Thermal::IsHot(GameHandle g) {
  StopPair s = Stops(g);
  return s.right < s.left;
}

bool Thermal::IsInfinitesimal(GameHandle g) {
  StopPair s = Stops(g);
  return s.left.IsZero() && s.right.IsZero();
}

std::shared_ptr<const Thermograph> Thermal::ThermographOf(GameHandle g) {
  return ThermographCanonical(store_.Canonical(g));
}

std::shared_ptr<const Thermograph> Thermal::ThermographCanonical(
    GameHandle c) {
  if (auto hit = impl_->graphs.Find(c.id())) return *hit;
  auto graph = std::make_shared<Thermograph>();
  std::optional<Dyadic> value = store_.NumberValue(c);
  if (value && value->IsInteger()) {
    graph->temperature = Dyadic(-1);
    graph->mast = *value;
    graph->left = graph->right = Trajectory::Constant(*value);
  } else {
    std::vector<GameHandle> left = store_.LeftOptions(c);
    std::vector<GameHandle> right = store_.RightOptions(c);
    if (left.empty() || right.empty()) {
      throw std::logic_error("canonical non-integer with an empty side");
    }
    Trajectory lw = ThermographCanonical(left.front())->right.Sheared(-1);
    for (GameHandle gl : left) {
      lw = Trajectory::Max(lw, ThermographCanonical(gl)->right.Sheared(-1));
    }
    Trajectory rw = ThermographCanonical(right.front())->left.Sheared(1);
    for (GameHandle gr : right) {
      rw = Trajectory::Min(rw, ThermographCanonical(gr)->left.Sheared(1));
    }
    if (lw.At(Dyadic(-1)) < rw.At(Dyadic(-1))) {
      throw std::logic_error("thermograph walls cross at t = -1");
    }
    std::optional<Dyadic> meet = Trajectory::FirstMeet(lw, rw);
    if (!meet) throw std::logic_error("thermograph walls never meet");
    graph->temperature = *meet;
    graph->mast = lw.At(*meet);
    graph->left = lw.FrozenAt(*meet);
    graph->right = rw.FrozenAt(*meet);
  }
  std::shared_ptr<const Thermograph> result = std::move(graph);
  impl_->graphs.Insert(c.id(), result);
  return result;
}

GameHandle Thermal::Cool(GameHandle g, const Dyadic& t) {
  if (t < Dyadic(-1)) throw std::domain_error("cooling below t = -1");
  return CoolCanonical(store_.Canonical(g), t);
}

GameHandle Thermal::CoolCanonical(GameHandle c, const Dyadic& t) {
  if (store_.IsInteger(c)) return c;
  CoolKey key{c.id(), t};
  if (auto hit = impl_->cooled.Find(key)) return *hit;
  std::shared_ptr<const Thermograph> graph = ThermographCanonical(c);
  GameHandle result;
  if (graph->temperature < t) {
    result = store_.Number(graph->mast);
  } else {
    GameHandle minus_t = store_.Number(-t);
    GameHandle plus_t = store_.Number(t);
    std::vector<GameHandle> left, right;
    for (GameHandle gl : store_.LeftOptions(c)) {
      left.push_back(store_.Add(CoolCanonical(gl, t), minus_t));
    }
    for (GameHandle gr : store_.RightOptions(c)) {
      right.push_back(store_.Add(CoolCanonical(gr, t), plus_t));
    }
    result = store_.Canonical(store_.Make(left, right));
  }
  impl_->cooled.Insert(key, result);
  return result;
}

std::vector<ThermicPair> Thermal::ThermicVersions(GameHandle g) {
  if (!IsHot(g)) throw NotHotError("thermic versions need a hot game");
  Dyadic temp = Temperature(g);
  std::vector<ThermicPair> pairs;
  for (GameHandle gl : store_.LeftOptions(g)) {
    for (GameHandle gr : store_.RightOptions(g)) {
      if (Temperature(store_.Make({gl}, {gr})) == temp) {
        pairs.push_back({gl, gr});
      }
    }
  }
  return pairs;
}

std::pair<WallDecomposition, WallDecomposition> Thermal::Decompose(
    GameHandle g) {
  if (store_.LeftCount(g) != 1 || store_.RightCount(g) != 1) {
    throw WrongShapeError("wall decomposition needs one option per side");
  }
  if (!IsHot(g)) throw NotHotError("wall decomposition needs a hot game");
  std::shared_ptr<const Thermograph> graph = ThermographOf(g);
  const Dyadic zero(0);
  auto split = [&](const Trajectory& wall) {
    WallDecomposition d;
    d.turning_points.push_back(zero);
    for (const WallPoint& p : wall.points()) {
      if (zero < p.t && p.t < graph->temperature) {
        d.turning_points.push_back(p.t);
      }
    }
    d.turning_points.push_back(graph->temperature);
    for (std::size_t i = 0; i + 1 < d.turning_points.size(); ++i) {
      const Dyadic& a = d.turning_points[i];
      const Dyadic& b = d.turning_points[i + 1];
      bool vertical = wall.At(a) == wall.At(b);
      d.segments.push_back(vertical ? SegmentKind::kVertical
                                    : SegmentKind::kOblique);
      (vertical ? d.vertical_total : d.oblique_total) += b - a;
    }
    return d;
  };
  return {split(graph->left), split(graph->right)};
}

Dyadic Thermal::TempUpperBound(GameHandle g) {
  std::vector<ThermicPair> pairs = ThermicVersions(g);
  if (pairs.empty()) throw std::logic_error("hot game without thermic pair");
  return TempUpperBound(g, pairs.front());
}

Dyadic Thermal::TempUpperBound(GameHandle g, const ThermicPair& pair) {
  if (!IsHot(g)) throw NotHotError("temperature bound needs a hot game");
  auto [left, right] = Decompose(store_.Make({pair.left}, {pair.right}));
  GameHandle h =
      left.vertical_total >= right.vertical_total ? pair.left : pair.right;
  return Ell(h) + Ell(g).Half();
}

std::string ThermographJson(const Thermograph& thermograph) {
  auto wall = [](const std::vector<WallPoint>& points) {
    nlohmann::json out = nlohmann::json::array();
    for (const WallPoint& p : points) {
      out.push_back({p.t.ToPow2String(), p.x.ToPow2String()});
    }
    return out;
  };
  nlohmann::json doc = {
      {"temperature", thermograph.temperature.ToPow2String()},
      {"mast", thermograph.mast.ToPow2String()},
      {"left_wall", wall(thermograph.LeftWall())},
      {"right_wall", wall(thermograph.RightWall())},
  };
  return doc.dump(2);
}

std::string ThermographSvg(const Thermograph& thermograph) {
  std::vector<WallPoint> left = thermograph.LeftWall();
  std::vector<WallPoint> right = thermograph.RightWall();
  double t_top = thermograph.temperature.ToDouble() + 1.5;
  double x_hi = left.front().x.ToDouble(), x_lo = right.front().x.ToDouble();
  for (const WallPoint& p : left) x_hi = std::max(x_hi, p.x.ToDouble());
  for (const WallPoint& p : right) x_lo = std::min(x_lo, p.x.ToDouble());
  x_hi += 1.0;
  x_lo -= 1.0;

  const double scale = 40.0, margin = 20.0;
  double width = (x_hi - x_lo) * scale + 2 * margin;
  double height = (t_top + 1.0) * scale + 2 * margin;
  auto px = [&](double x) { return margin + (x_hi - x) * scale; };
  auto py = [&](double t) { return margin + (t_top - t) * scale; };
  auto polyline = [&](const std::vector<WallPoint>& points,
                      const char* color) {
    std::ostringstream os;
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (const WallPoint& p : points) {
      os << px(p.x.ToDouble()) << ',' << py(p.t.ToDouble()) << ' ';
    }
    os << "\"/>\n";
    return os.str();
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n";
  os << "<line stroke=\"gray\" x1=\"0\" x2=\"" << width << "\" y1=\"" << py(0)
     << "\" y2=\"" << py(0) << "\"/>\n";
  os << polyline(left, "blue") << polyline(right, "red");
  double mast_x = px(thermograph.mast.ToDouble());
  os << "<line stroke=\"black\" stroke-dasharray=\"4 3\" x1=\"" << mast_x
     << "\" x2=\"" << mast_x << "\" y1=\""
     << py(thermograph.temperature.ToDouble()) << "\" y2=\"" << py(t_top)
     << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace cgt
