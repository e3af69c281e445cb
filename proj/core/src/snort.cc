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

#include "cgt/snort.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sharded_map.h"

namespace cgt {
namespace {

std::uint64_t Bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

SnortBoard::SnortBoard(int vertices) {
  if (vertices < 0 || vertices > kMaxVertices) {
    throw std::invalid_argument("vertex count out of range");
  }
  adj_.assign(vertices, 0);
  tint_.assign(vertices, Tint::kNone);
}

void SnortBoard::AddEdge(int u, int v) {
  if (u < 0 || v < 0 || u >= size() || v >= size()) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  adj_[u] |= Bit(v);
  adj_[v] |= Bit(u);
}

void SnortBoard::SetTint(int v, Tint tint) {
  if (v < 0 || v >= size()) throw std::invalid_argument("vertex out of range");
  tint_[v] = tint;
}

SnortBoard SnortBoard::Parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<SnortBoard> board;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    if (!board) {
      int n;
      std::string rest;
      if (!(fields >> n) || (fields >> rest)) {
        throw std::invalid_argument("expected vertex count, got '" + line + "'");
      }
      board.emplace(n);
      continue;
    }
    std::string head;
    fields >> head;
    if (head == "L:" || head == "R:") {
      int v;
      while (fields >> v) board->SetTint(v, head == "L:" ? Tint::kLeft : Tint::kRight);
      if (!fields.eof()) throw std::invalid_argument("bad tint line '" + line + "'");
      continue;
    }
    std::istringstream edge(line);
    int u, v;
    std::string rest;
    if (!(edge >> u >> v) || (edge >> rest)) {
      throw std::invalid_argument("bad edge line '" + line + "'");
    }
    board->AddEdge(u, v);
  }
  if (!board) throw std::invalid_argument("missing vertex count");
  return *board;
}

SnortBoard SnortBoard::Path(int n, PathEnd left_end, PathEnd right_end) {
  int pieces = (left_end != PathEnd::kNone) + (right_end != PathEnd::kNone);
  if (n < pieces) throw std::invalid_argument("path too short for its ends");
  SnortBoard board(n);
  for (int v = 0; v + 1 < n; ++v) board.AddEdge(v, v + 1);
  auto place = [&](PathEnd end, int v) {
    if (end == PathEnd::kLeft) board = board.AfterLeft(v);
    if (end == PathEnd::kRight) board = board.AfterRight(v);
  };
  // The far end first so that vertex 0 keeps its label.
  place(right_end, n - 1);
  place(left_end, 0);
  return board;
}

SnortBoard SnortBoard::Star(int leaves) {
  SnortBoard board(leaves + 1);
  for (int v = 1; v <= leaves; ++v) board.AddEdge(0, v);
  return board;
}

SnortBoard SnortBoard::Grid(int rows, int columns) {
  if (rows < 0 || columns < 0) throw std::invalid_argument("bad grid size");
  SnortBoard board(rows * columns);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < columns; ++c) {
      int v = r * columns + c;
      if (c + 1 < columns) board.AddEdge(v, v + 1);
      if (r + 1 < rows) board.AddEdge(v, v + columns);
    }
  }
  return board;
}

int SnortBoard::Degree(int v) const { return std::popcount(adj_[v]); }

int SnortBoard::MaxDegree() const {
  int best = 0;
  for (int v = 0; v < size(); ++v) best = std::max(best, Degree(v));
  return best;
}

bool SnortBoard::Connected() const {
  if (size() == 0) return true;
  std::uint64_t all = size() == 64 ? ~std::uint64_t{0} : Bit(size()) - 1;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) {
      next |= adj_[std::countr_zero(f)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

std::string SnortBoard::ToString() const {
  std::ostringstream os;
  os << size() << '\n';
  for (int u = 0; u < size(); ++u) {
    for (int v = u + 1; v < size(); ++v) {
      if (Adjacent(u, v)) os << u << ' ' << v << '\n';
    }
  }
  for (Tint want : {Tint::kLeft, Tint::kRight}) {
    std::string line;
    for (int v = 0; v < size(); ++v) {
      if (tint_[v] == want) line += ' ' + std::to_string(v);
    }
    if (!line.empty()) os << (want == Tint::kLeft ? "L:" : "R:") << line << '\n';
  }
  return os.str();
}

SnortBoard SnortBoard::SwappedTints() const {
  SnortBoard out = *this;
  for (Tint& t : out.tint_) {
    if (t == Tint::kLeft) {
      t = Tint::kRight;
    } else if (t == Tint::kRight) {
      t = Tint::kLeft;
    }
  }
  return out;
}

SnortBoard SnortBoard::Induced(std::uint64_t keep) const {
  std::vector<int> old_of_new;
  std::vector<int> new_of_old(size(), -1);
  for (int v = 0; v < size(); ++v) {
    if (keep & Bit(v)) {
      new_of_old[v] = static_cast<int>(old_of_new.size());
      old_of_new.push_back(v);
    }
  }
  SnortBoard out(static_cast<int>(old_of_new.size()));
  for (int i = 0; i < out.size(); ++i) {
    int v = old_of_new[i];
    out.tint_[i] = tint_[v];
    for (std::uint64_t n = adj_[v] & keep; n; n &= n - 1) {
      out.adj_[i] |= Bit(new_of_old[std::countr_zero(n)]);
    }
  }
  return out;
}

std::vector<SnortBoard> SnortBoard::Components() const {
  std::vector<SnortBoard> out;
  std::uint64_t left = size() == 64 ? ~std::uint64_t{0} : Bit(size()) - 1;
  while (left) {
    std::uint64_t piece = left & (~left + 1), frontier = piece;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) {
        next |= adj_[std::countr_zero(f)];
      }
      frontier = next & ~piece;
      piece |= next;
    }
    out.push_back(Induced(piece));
    left &= ~piece;
  }
  return out;
}

SnortBoard SnortBoard::Played(int v, Tint own, Tint other) const {
  if (v < 0 || v >= size()) throw std::invalid_argument("vertex out of range");
  if (tint_[v] == other) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is adjacent to an opposing piece");
  }
  SnortBoard next = *this;
  std::uint64_t keep = (size() == 64 ? ~std::uint64_t{0} : Bit(size()) - 1);
  keep &= ~Bit(v);
  for (std::uint64_t n = adj_[v]; n; n &= n - 1) {
    int u = std::countr_zero(n);
    if (tint_[u] == Tint::kNone) {
      next.tint_[u] = own;
    } else if (tint_[u] == other) {
      keep &= ~Bit(u);  // now next to both colours
    }
  }
  return next.Induced(keep);
}

SnortBoard SnortBoard::AfterLeft(int v) const {
  return Played(v, Tint::kLeft, Tint::kRight);
}

SnortBoard SnortBoard::AfterRight(int v) const {
  return Played(v, Tint::kRight, Tint::kLeft);
}

std::vector<SnortBoard> SnortBoard::LeftMoves() const {
  std::vector<SnortBoard> out;
  for (int v = 0; v < size(); ++v) {
    if (tint_[v] != Tint::kRight) out.push_back(AfterLeft(v));
  }
  return out;
}

std::vector<SnortBoard> SnortBoard::RightMoves() const {
  std::vector<SnortBoard> out;
  for (int v = 0; v < size(); ++v) {
    if (tint_[v] != Tint::kLeft) out.push_back(AfterRight(v));
  }
  return out;
}

std::string SnortBoard::RawKey() const {
  std::string key(1, static_cast<char>(size()));
  for (int v = 0; v < size(); ++v) {
    key += static_cast<char>(tint_[v]);
    key.append(reinterpret_cast<const char*>(&adj_[v]), sizeof adj_[v]);
  }
  return key;
}

std::string SnortBoard::Key() const {
  SnortBoard reversed(size());
  int n = size();
  for (int v = 0; v < n; ++v) {
    reversed.tint_[n - 1 - v] = tint_[v];
    for (std::uint64_t a = adj_[v]; a; a &= a - 1) {
      reversed.adj_[n - 1 - v] |= Bit(n - 1 - std::countr_zero(a));
    }
  }
  return std::min(RawKey(), reversed.RawKey());
}

struct Snort::Impl {
  internal::ShardedMap<std::string, GameHandle> values;
};

Snort::Snort(GameStore& store)
    : store_(store), impl_(std::make_unique<Impl>()) {}

Snort::~Snort() = default;

GameHandle Snort::Value(const SnortBoard& board) {
  GameHandle total = store_.Zero();
  for (const SnortBoard& part : board.Components()) {
    total = store_.Add(total, ConnectedValue(part));
  }
  return total;
}

GameHandle Snort::ConnectedValue(const SnortBoard& component) {
  std::string key = component.Key();
  if (auto hit = impl_->values.Find(key)) return *hit;
  GameHandle value = store_.Canonical(Form(component));
  impl_->values.Insert(key, value);
  return value;
}

GameHandle Snort::Form(const SnortBoard& board) {
  std::vector<GameHandle> left, right;
  for (const SnortBoard& next : board.LeftMoves()) left.push_back(Value(next));
  for (const SnortBoard& next : board.RightMoves()) right.push_back(Value(next));
  return store_.Make(left, right);
}

std::vector<SnortBoard> EnumerateConnectedGraphs(int max_vertices, int cap) {
  if (max_vertices < 1 || max_vertices > cap) {
    throw std::invalid_argument("graph enumeration size outside 1.." +
                                std::to_string(cap));
  }
  if (max_vertices > 8) {
    throw std::invalid_argument("graph enumeration is limited to 8 vertices");
  }
  std::vector<SnortBoard> out;
  for (int k = 1; k <= max_vertices; ++k) {
    std::vector<std::pair<int, int>> edges;
    int index[8][8];
    for (int u = 0; u < k; ++u) {
      for (int v = u + 1; v < k; ++v) {
        index[u][v] = index[v][u] = static_cast<int>(edges.size());
        edges.push_back({u, v});
      }
    }
    // Edge-index maps for every vertex permutation.
    std::vector<std::vector<int>> maps;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> map;
      for (auto [u, v] : edges) map.push_back(index[perm[u]][perm[v]]);
      maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> classes;
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
      SnortBoard g(k);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (mask >> e & 1u) g.AddEdge(edges[e].first, edges[e].second);
      }
      if (!g.Connected()) continue;
      std::uint32_t best = mask;
      for (const std::vector<int>& map : maps) {
        std::uint32_t image = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (mask >> e & 1u) image |= 1u << map[e];
        }
        best = std::min(best, image);
      }
      classes.insert(best);
    }
    for (std::uint32_t mask : classes) {
      SnortBoard g(k);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (mask >> e & 1u) g.AddEdge(edges[e].first, edges[e].second);
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace cgt
