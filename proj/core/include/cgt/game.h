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

#ifndef CGT_GAME_H_
#define CGT_GAME_H_

#include <atomic>
#include <chrono>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cgt/dyadic.h"

namespace cgt {

using GameId = std::uint32_t;

// Reference to a node of a GameStore. Two handles from the same store are
// equal iff they denote the same node; a default-constructed handle is
// invalid everywhere.
class GameHandle {
 public:
  GameHandle() = default;

  GameId id() const { return id_; }
  std::uint32_t store_tag() const { return tag_; }
  bool valid() const { return tag_ != 0; }

  friend bool operator==(GameHandle, GameHandle) = default;
  friend auto operator<=>(GameHandle, GameHandle) = default;

 private:
  friend class GameStore;
  GameHandle(std::uint32_t tag, GameId id) : tag_(tag), id_(id) {}

  std::uint32_t tag_ = 0;
  GameId id_ = 0;
};

// Normal-play outcome classes.
enum class Outcome { kLeft, kRight, kNext, kPrevious };

// L > N > R and L > P > R; N and P are incomparable.
bool OutcomeLeq(Outcome a, Outcome b);
std::string_view OutcomeName(Outcome o);  // "L", "R", "N", "P"

class InvalidHandleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a StoreLimits cap (node count or deadline) is hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StoreLimits {
  std::size_t max_nodes = 0;  // 0 = unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Append-only, hash-consed store of short games. Each node is the pair of
// its Left and Right option sets, kept sorted by id so that structurally
// equal nodes share one id. All memo tables are keyed by node id.
//
// Thread-safe: every public member may be called concurrently; results are
// as if the calls were serialized. Ids depend on creation order and are
// therefore session-local; printed forms are not.
class GameStore {
 public:
  GameStore();
  ~GameStore();
  GameStore(const GameStore&) = delete;
  GameStore& operator=(const GameStore&) = delete;

  // -- construction ---------------------------------------------------------
  GameHandle Make(std::span<const GameHandle> left,
                  std::span<const GameHandle> right);
  GameHandle Make(std::initializer_list<GameHandle> left,
                  std::initializer_list<GameHandle> right) {
    return Make(std::span<const GameHandle>(left.begin(), left.size()),
                std::span<const GameHandle>(right.begin(), right.size()));
  }

  GameHandle Zero();
  GameHandle Star();
  GameHandle Up();    // {0|*}
  GameHandle Down();  // {*|0}
  GameHandle Integer(long long n) { return Number(Dyadic(n)); }
  // Canonical form of a dyadic rational.
  GameHandle Number(const Dyadic& x);
  // {g | -g}
  GameHandle PlusMinus(GameHandle g);

  std::vector<GameHandle> LeftOptions(GameHandle g) const;
  std::vector<GameHandle> RightOptions(GameHandle g) const;
  std::size_t LeftCount(GameHandle g) const;
  std::size_t RightCount(GameHandle g) const;

  // -- arithmetic -----------------------------------------------------------
  GameHandle Negate(GameHandle g);
  // Literal disjunctive sum: the node built by the recursive definition,
  // without simplification.
  GameHandle Sum(GameHandle g, GameHandle h);
  GameHandle Difference(GameHandle g, GameHandle h) {
    return Sum(g, Negate(h));
  }
  // Canonical form of g + h, built through canonical options.
  GameHandle Add(GameHandle g, GameHandle h);
  GameHandle Subtract(GameHandle g, GameHandle h) { return Add(g, Negate(h)); }

  // -- comparison -----------------------------------------------------------
  Outcome OutcomeOf(GameHandle g);
  bool LeftWinsMovingFirst(GameHandle g);
  bool RightWinsMovingFirst(GameHandle g);

  bool Leq(GameHandle g, GameHandle h);
  bool Geq(GameHandle g, GameHandle h) { return Leq(h, g); }
  bool Eq(GameHandle g, GameHandle h) { return Leq(g, h) && Leq(h, g); }
  bool Less(GameHandle g, GameHandle h) { return Leq(g, h) && !Leq(h, g); }
  bool ConfusedWith(GameHandle g, GameHandle h) {
    return !Leq(g, h) && !Leq(h, g);
  }

  // -- simplification -------------------------------------------------------
  GameHandle Canonical(GameHandle g);
  bool IsCanonical(GameHandle g);
  // The number g equals, if it equals one.
  std::optional<Dyadic> NumberValue(GameHandle g);
  bool IsNumber(GameHandle g) { return NumberValue(g).has_value(); }
  bool IsInteger(GameHandle g);

  // -- text -----------------------------------------------------------------
  // Notation for the literal node; numbers, *, ^, v and +-X are abbreviated.
  // Output re-parses with ParseGame to the same node.
  std::string Print(GameHandle g);

  // -- housekeeping ---------------------------------------------------------
  std::size_t size() const;
  void SetLimits(const StoreLimits& limits);
  StoreLimits limits() const;
  void CheckHandle(GameHandle g) const;

 private:
  struct Node;
  struct Impl;

  GameHandle Wrap(GameId id) const { return GameHandle(tag_, id); }
  std::vector<GameId> Unwrap(std::span<const GameHandle> handles) const;
  const Node& NodeAt(GameId id) const;

  GameId Intern(std::vector<GameId> left, std::vector<GameId> right);
  GameId NumberId(const Dyadic& x);
  GameId NegateId(GameId g);
  GameId SumId(GameId g, GameId h);
  GameId AddId(GameId g, GameId h);
  GameId CanonicalId(GameId g);
  std::optional<Dyadic> CanonicalNumber(GameId canonical);
  bool LeqId(GameId g, GameId h);
  bool LeftWinsFirstId(GameId g);
  bool RightWinsFirstId(GameId g);
  std::string PrintId(GameId g);

  std::uint32_t tag_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cgt

#endif  // CGT_GAME_H_
