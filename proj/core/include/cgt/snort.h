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

#ifndef CGT_SNORT_H_
#define CGT_SNORT_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/game.h"

namespace cgt {

// Who may still play on a vertex. A vertex next to a Left piece is
// kLeft (only Left may play there); next to pieces of both colours it is
// dead and removed from the board.
enum class Tint : std::uint8_t { kNone, kLeft, kRight };

// Piece placed on an end vertex of a path, if any.
enum class PathEnd { kNone, kLeft, kRight };

// Snort position on a simple graph with at most 64 vertices. Placed pieces
// are not stored: their vertices are deleted and their neighbours tinted.
class SnortBoard {
 public:
  static constexpr int kMaxVertices = 64;

  SnortBoard() = default;
  explicit SnortBoard(int vertices);

  // Line 1: vertex count. Then "u v" edge lines (0-based) and optional
  // "L: i j ..." / "R: i j ..." tint lines. Blank lines and '#' comments
  // are skipped. Throws std::invalid_argument on malformed input.
  static SnortBoard Parse(std::string_view text);

  // Path on n vertices counting the end pieces; PathEnd::kLeft on an end
  // puts a Left piece on that vertex. Throws std::invalid_argument if
  // pieces of opposite colours would be adjacent or do not fit.
  static SnortBoard Path(int n, PathEnd left_end = PathEnd::kNone,
                         PathEnd right_end = PathEnd::kNone);
  static SnortBoard Star(int leaves);  // K_{1,leaves}, centre is vertex 0
  static SnortBoard Grid(int rows, int columns);

  void AddEdge(int u, int v);
  void SetTint(int v, Tint tint);

  int size() const { return static_cast<int>(tint_.size()); }
  bool Adjacent(int u, int v) const { return adj_[u] >> v & 1u; }
  Tint tint(int v) const { return tint_[v]; }
  int Degree(int v) const;
  int MaxDegree() const;
  bool Connected() const;

  std::string ToString() const;  // in Parse format

  SnortBoard SwappedTints() const;  // negates the value
  std::vector<SnortBoard> Components() const;
  // Position after Left (Right) plays on v; v must be playable for them.
  SnortBoard AfterLeft(int v) const;
  SnortBoard AfterRight(int v) const;
  std::vector<SnortBoard> LeftMoves() const;
  std::vector<SnortBoard> RightMoves() const;

  // Labelled structure; a path and its reversal share a key.
  std::string Key() const;

  friend bool operator==(const SnortBoard&, const SnortBoard&) = default;

 private:
  SnortBoard Played(int v, Tint own, Tint other) const;
  SnortBoard Induced(std::uint64_t keep) const;
  std::string RawKey() const;

  std::vector<std::uint64_t> adj_;
  std::vector<Tint> tint_;
};

class Snort {
 public:
  explicit Snort(GameStore& store);
  ~Snort();

  GameHandle Value(const SnortBoard& board);  // canonical
  GameHandle Form(const SnortBoard& board);   // literal, options = move values

  GameStore& store() { return store_; }

 private:
  struct Impl;
  GameHandle ConnectedValue(const SnortBoard& component);

  GameStore& store_;
  std::unique_ptr<Impl> impl_;
};

// Connected untinted graphs on 1..max_vertices vertices, one per
// isomorphism class. max_vertices may not exceed `cap`.
std::vector<SnortBoard> EnumerateConnectedGraphs(int max_vertices,
                                                 int cap = 6);

}  // namespace cgt

#endif  // CGT_SNORT_H_
