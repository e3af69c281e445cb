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

#ifndef CGT_DOMINEERING_H_
#define CGT_DOMINEERING_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgt/game.h"

namespace cgt {

// A Domineering position: a finite set of free lattice cells, stored as row
// bitmasks and kept translated so that the first row and column are used.
// Left places vertical dominoes, Right horizontal ones.
class DomBoard {
 public:
  static constexpr int kMaxColumns = 32;

  DomBoard() = default;

  // Lines of '#' (free cell) and '.' (no cell). Throws std::invalid_argument
  // on other characters, on an empty board or when wider than kMaxColumns.
  static DomBoard Parse(std::string_view text);
  // Cells as (column, row) pairs; any translation is accepted.
  static DomBoard FromCells(std::span<const std::pair<int, int>> cells);
  static DomBoard Rectangle(int rows, int columns);

  int rows() const { return static_cast<int>(rows_.size()); }
  int columns() const { return columns_; }
  bool Has(int row, int column) const;
  int CellCount() const;
  bool empty() const { return rows_.empty(); }

  std::string ToString() const;

  DomBoard Rotated() const;          // quarter turn; negates the value
  DomBoard MirroredColumns() const;  // value-preserving
  DomBoard MirroredRows() const;     // value-preserving

  // Connected pieces under edge adjacency, in row-major order of first cell.
  std::vector<DomBoard> Components() const;
  std::vector<DomBoard> LeftMoves() const;
  std::vector<DomBoard> RightMoves() const;

  // Identical for boards related by translation or reflection.
  std::string Key() const;

  friend bool operator==(const DomBoard&, const DomBoard&) = default;

 private:
  explicit DomBoard(std::vector<std::uint32_t> rows);
  void Normalize();
  std::string RawKey() const;

  std::vector<std::uint32_t> rows_;
  int columns_ = 0;
};

// Game values of Domineering positions, memoized per symmetry class.
class Domineering {
 public:
  explicit Domineering(GameStore& store);
  ~Domineering();

  // Canonical value; components are evaluated separately and added.
  GameHandle Value(const DomBoard& board);
  // Literal node whose options are the values of the positions after each
  // move. Equal to Value(board).
  GameHandle Form(const DomBoard& board);

  GameStore& store() { return store_; }

 private:
  struct Impl;
  GameHandle ConnectedValue(const DomBoard& component);

  GameStore& store_;
  std::unique_ptr<Impl> impl_;
};

// Snakes fitting in two rows and at most `max_columns` columns: edge-connected
// paths of cells without a 2x2 block, one per translation/reflection class.
std::vector<DomBoard> EnumerateSnakes(int max_columns);

}  // namespace cgt

#endif  // CGT_DOMINEERING_H_
