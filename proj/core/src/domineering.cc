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

#include "cgt/domineering.h"

#include <algorithm>
#include <bit>
#include <climits>
#include <set>
#include <stdexcept>

#include "sharded_map.h"

namespace cgt {
namespace {

std::uint32_t ReverseBits(std::uint32_t row, int width) {
  std::uint32_t out = 0;
  for (int c = 0; c < width; ++c) {
    if (row >> c & 1u) out |= 1u << (width - 1 - c);
  }
  return out;
}

}  // namespace

DomBoard::DomBoard(std::vector<std::uint32_t> rows) : rows_(std::move(rows)) {
  Normalize();
}

void DomBoard::Normalize() {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  auto first = std::find_if(rows_.begin(), rows_.end(),
                            [](std::uint32_t r) { return r != 0; });
  rows_.erase(rows_.begin(), first);
  std::uint32_t all = 0;
  for (std::uint32_t r : rows_) all |= r;
  if (all == 0) {
    columns_ = 0;
    return;
  }
  int shift = std::countr_zero(all);
  for (std::uint32_t& r : rows_) r >>= shift;
  columns_ = std::bit_width(all >> shift);
}

DomBoard DomBoard::Parse(std::string_view text) {
  std::vector<std::uint32_t> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (static_cast<int>(line.size()) > kMaxColumns) {
      throw std::invalid_argument("board wider than 32 columns");
    }
    std::uint32_t row = 0;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (line[c] == '#') {
        row |= 1u << c;
      } else if (line[c] != '.') {
        throw std::invalid_argument("illegal board character '" +
                                    std::string(1, line[c]) + "'");
      }
    }
    rows.push_back(row);
    start = end + 1;
  }
  DomBoard board(std::move(rows));
  if (board.empty()) throw std::invalid_argument("board has no cells");
  return board;
}

DomBoard DomBoard::FromCells(std::span<const std::pair<int, int>> cells) {
  if (cells.empty()) return DomBoard();
  int min_x = INT_MAX, min_y = INT_MAX, max_x = INT_MIN, max_y = INT_MIN;
  for (auto [x, y] : cells) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  if (max_x - min_x >= kMaxColumns) {
    throw std::invalid_argument("board wider than 32 columns");
  }
  std::vector<std::uint32_t> rows(max_y - min_y + 1, 0);
  for (auto [x, y] : cells) rows[y - min_y] |= 1u << (x - min_x);
  return DomBoard(std::move(rows));
}

DomBoard DomBoard::Rectangle(int rows, int columns) {
  if (rows < 0 || columns < 0 || columns > kMaxColumns) {
    throw std::invalid_argument("bad rectangle size");
  }
  std::uint32_t full = columns == 32 ? ~0u : (1u << columns) - 1;
  return DomBoard(std::vector<std::uint32_t>(rows, full));
}

bool DomBoard::Has(int row, int column) const {
  if (row < 0 || row >= rows() || column < 0 || column >= columns_) {
    return false;
  }
  return rows_[row] >> column & 1u;
}

int DomBoard::CellCount() const {
  int n = 0;
  for (std::uint32_t r : rows_) n += std::popcount(r);
  return n;
}

std::string DomBoard::ToString() const {
  std::string out;
  for (std::uint32_t r : rows_) {
    for (int c = 0; c < columns_; ++c) out += (r >> c & 1u) ? '#' : '.';
    out += '\n';
  }
  return out;
}

DomBoard DomBoard::Rotated() const {
  std::vector<std::uint32_t> rows(columns_, 0);
  int n = this->rows();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < columns_; ++c) {
      if (Has(r, c)) rows[c] |= 1u << (n - 1 - r);
    }
  }
  return DomBoard(std::move(rows));
}

DomBoard DomBoard::MirroredColumns() const {
  std::vector<std::uint32_t> rows;
  for (std::uint32_t r : rows_) rows.push_back(ReverseBits(r, columns_));
  return DomBoard(std::move(rows));
}

DomBoard DomBoard::MirroredRows() const {
  return DomBoard(std::vector<std::uint32_t>(rows_.rbegin(), rows_.rend()));
}

std::vector<DomBoard> DomBoard::Components() const {
  std::vector<std::uint32_t> left = rows_;
  std::vector<DomBoard> out;
  for (int r0 = 0; r0 < rows(); ++r0) {
    while (left[r0] != 0) {
      std::vector<std::uint32_t> piece(rows_.size(), 0);
      piece[r0] = left[r0] & (~left[r0] + 1);  // lowest cell
      // Grow by row-wise dilation until stable.
      bool changed = true;
      while (changed) {
        changed = false;
        for (int r = 0; r < rows(); ++r) {
          std::uint32_t grow = piece[r] | piece[r] << 1 | piece[r] >> 1;
          if (r > 0) grow |= piece[r - 1];
          if (r + 1 < rows()) grow |= piece[r + 1];
          grow &= left[r];
          if (grow != piece[r]) {
            piece[r] = grow;
            changed = true;
          }
        }
      }
      for (int r = 0; r < rows(); ++r) left[r] &= ~piece[r];
      out.push_back(DomBoard(std::move(piece)));
    }
  }
  return out;
}

std::vector<DomBoard> DomBoard::LeftMoves() const {
  std::vector<DomBoard> out;
  for (int r = 0; r + 1 < rows(); ++r) {
    std::uint32_t spots = rows_[r] & rows_[r + 1];
    for (int c = 0; c < columns_; ++c) {
      if (!(spots >> c & 1u)) continue;
      std::vector<std::uint32_t> next = rows_;
      next[r] &= ~(1u << c);
      next[r + 1] &= ~(1u << c);
      out.push_back(DomBoard(std::move(next)));
    }
  }
  return out;
}

std::vector<DomBoard> DomBoard::RightMoves() const {
  std::vector<DomBoard> out;
  for (int r = 0; r < rows(); ++r) {
    std::uint32_t spots = rows_[r] & rows_[r] >> 1;
    for (int c = 0; c + 1 < columns_; ++c) {
      if (!(spots >> c & 1u)) continue;
      std::vector<std::uint32_t> next = rows_;
      next[r] &= ~(3u << c);
      out.push_back(DomBoard(std::move(next)));
    }
  }
  return out;
}

std::string DomBoard::RawKey() const {
  std::string key(1, static_cast<char>(columns_));
  for (std::uint32_t r : rows_) {
    key.append(reinterpret_cast<const char*>(&r), sizeof r);
  }
  return key;
}

std::string DomBoard::Key() const {
  DomBoard mc = MirroredColumns();
  return std::min({RawKey(), mc.RawKey(), MirroredRows().RawKey(),
                   mc.MirroredRows().RawKey()});
}

struct Domineering::Impl {
  internal::ShardedMap<std::string, GameHandle> values;
};

Domineering::Domineering(GameStore& store)
    : store_(store), impl_(std::make_unique<Impl>()) {}

Domineering::~Domineering() = default;

GameHandle Domineering::Value(const DomBoard& board) {
  if (board.empty()) return store_.Zero();
  std::vector<DomBoard> parts = board.Components();
  GameHandle total = ConnectedValue(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    total = store_.Add(total, ConnectedValue(parts[i]));
  }
  return total;
}

GameHandle Domineering::ConnectedValue(const DomBoard& component) {
  std::string key = component.Key();
  if (auto hit = impl_->values.Find(key)) return *hit;
  GameHandle value = store_.Canonical(Form(component));
  impl_->values.Insert(key, value);
  return value;
}

GameHandle Domineering::Form(const DomBoard& board) {
  std::vector<GameHandle> left, right;
  for (const DomBoard& next : board.LeftMoves()) left.push_back(Value(next));
  for (const DomBoard& next : board.RightMoves()) right.push_back(Value(next));
  return store_.Make(left, right);
}

std::vector<DomBoard> EnumerateSnakes(int max_columns) {
  if (max_columns < 1 || max_columns > DomBoard::kMaxColumns) {
    throw std::invalid_argument("snake width out of range");
  }
  std::set<std::string> seen;
  std::vector<DomBoard> out;
  std::vector<std::pair<int, int>> cells{{0, 0}};
  // Walk along two rows; a row switch needs two steps since the last one or
  // the cells would close a 2x2 block.
  auto walk = [&](auto&& self, int steps_since_switch) -> void {
    DomBoard board = DomBoard::FromCells(cells);
    if (seen.insert(board.Key()).second) out.push_back(board);
    auto [x, y] = cells.back();
    if (x + 1 < max_columns) {
      cells.push_back({x + 1, y});
      self(self, steps_since_switch + 1);
      cells.pop_back();
    }
    if (steps_since_switch >= 2) {
      cells.push_back({x, 1 - y});
      self(self, 0);
      cells.pop_back();
    }
  };
  walk(walk, 2);
  std::stable_sort(out.begin(), out.end(),
                   [](const DomBoard& a, const DomBoard& b) {
                     return a.CellCount() < b.CellCount();
                   });
  return out;
}

}  // namespace cgt
