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

#include "cgt/game.h"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "sharded_map.h"

namespace cgt {
namespace {

std::atomic<std::uint32_t> next_store_tag{1};

void SortUnique(std::vector<GameId>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

std::size_t HashOptions(const std::vector<GameId>& left,
                        const std::vector<GameId>& right) {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(left.size());
  for (GameId id : left) mix(id);
  mix(right.size() + 0x10000);
  for (GameId id : right) mix(id);
  return h;
}

}  // namespace

bool OutcomeLeq(Outcome a, Outcome b) {
  if (a == b) return true;
  if (a == Outcome::kRight || b == Outcome::kLeft) return true;
  return false;
}

std::string_view OutcomeName(Outcome o) {
  switch (o) {
    case Outcome::kLeft:
      return "L";
    case Outcome::kRight:
      return "R";
    case Outcome::kNext:
      return "N";
    case Outcome::kPrevious:
      return "P";
  }
  return "?";
}

struct GameStore::Node {
  std::vector<GameId> left;
  std::vector<GameId> right;
};

struct GameStore::Impl {
  static constexpr unsigned kChunkBits = 12;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = std::size_t{1} << 19;

  Impl() : chunks(new std::atomic<Node*>[kMaxChunks]()) {}
  ~Impl() {
    for (std::size_t i = 0; i < kMaxChunks; ++i) {
      Node* chunk = chunks[i].load(std::memory_order_relaxed);
      if (chunk == nullptr) break;
      delete[] chunk;
    }
  }

  // Node storage: chunks never move, so a published node can be read
  // without locking.
  std::unique_ptr<std::atomic<Node*>[]> chunks;
  std::atomic<std::uint32_t> size{0};

  mutable std::mutex intern_mu;
  std::unordered_map<std::size_t, std::vector<GameId>> by_hash;
  StoreLimits limits;

  internal::ShardedMap<GameId, GameId> negation;
  internal::ShardedMap<GameId, GameId> canonical;
  internal::ShardedMap<GameId, std::optional<Dyadic>> numeric;
  internal::ShardedMap<Dyadic, GameId, DyadicHash> numbers;
  internal::ShardedMap<std::uint64_t, GameId> sums;
  internal::ShardedMap<std::uint64_t, GameId> adds;
  internal::ShardedMap<std::uint64_t, bool> leq;
  internal::ShardedMap<GameId, bool> left_first;
  internal::ShardedMap<GameId, bool> right_first;

  GameId zero = 0;
  GameId star = 0;
  GameId up = 0;
  GameId down = 0;
};

GameStore::GameStore()
    : tag_(next_store_tag.fetch_add(1)), impl_(std::make_unique<Impl>()) {
  impl_->zero = NumberId(Dyadic(0));
  impl_->star = Intern({impl_->zero}, {impl_->zero});
  impl_->up = Intern({impl_->zero}, {impl_->star});
  impl_->down = Intern({impl_->star}, {impl_->zero});
}

GameStore::~GameStore() = default;

const GameStore::Node& GameStore::NodeAt(GameId id) const {
  Node* chunk =
      impl_->chunks[id >> Impl::kChunkBits].load(std::memory_order_acquire);
  return chunk[id & (Impl::kChunkSize - 1)];
}

GameId GameStore::Intern(std::vector<GameId> left, std::vector<GameId> right) {
  SortUnique(left);
  SortUnique(right);
  std::size_t h = HashOptions(left, right);
  std::lock_guard<std::mutex> lock(impl_->intern_mu);
  auto& bucket = impl_->by_hash[h];
  for (GameId id : bucket) {
    const Node& node = NodeAt(id);
    if (node.left == left && node.right == right) return id;
  }
  std::uint32_t id = impl_->size.load(std::memory_order_relaxed);
  const StoreLimits& limits = impl_->limits;
  if (limits.max_nodes != 0 && id >= limits.max_nodes) {
    throw ResourceError("game store node cap of " +
                        std::to_string(limits.max_nodes) + " reached");
  }
  if (limits.deadline && (id & 255) == 0 &&
      std::chrono::steady_clock::now() > *limits.deadline) {
    throw ResourceError("time budget exhausted");
  }
  std::size_t chunk_index = id >> Impl::kChunkBits;
  if (chunk_index >= Impl::kMaxChunks) {
    throw ResourceError("game store address space exhausted");
  }
  Node* chunk = impl_->chunks[chunk_index].load(std::memory_order_relaxed);
  if (chunk == nullptr) {
    chunk = new Node[Impl::kChunkSize];
    impl_->chunks[chunk_index].store(chunk, std::memory_order_release);
  }
  Node& slot = chunk[id & (Impl::kChunkSize - 1)];
  slot.left = std::move(left);
  slot.right = std::move(right);
  bucket.push_back(id);
  impl_->size.store(id + 1, std::memory_order_release);
  return id;
}

void GameStore::CheckHandle(GameHandle g) const {
  if (!g.valid() || g.store_tag() != tag_) {
    throw InvalidHandleError("game handle does not belong to this store");
  }
  if (g.id() >= impl_->size.load(std::memory_order_acquire)) {
    throw InvalidHandleError("game handle id out of range");
  }
}

std::vector<GameId> GameStore::Unwrap(
    std::span<const GameHandle> handles) const {
  std::vector<GameId> ids;
  ids.reserve(handles.size());
  for (GameHandle h : handles) {
    CheckHandle(h);
    ids.push_back(h.id());
  }
  return ids;
}

std::size_t GameStore::size() const {
  return impl_->size.load(std::memory_order_acquire);
}

void GameStore::SetLimits(const StoreLimits& limits) {
  std::lock_guard<std::mutex> lock(impl_->intern_mu);
  impl_->limits = limits;
}

StoreLimits GameStore::limits() const {
  std::lock_guard<std::mutex> lock(impl_->intern_mu);
  return impl_->limits;
}

// ---------------------------------------------------------------------------
// Construction

GameHandle GameStore::Make(std::span<const GameHandle> left,
                           std::span<const GameHandle> right) {
  return Wrap(Intern(Unwrap(left), Unwrap(right)));
}

GameHandle GameStore::Zero() { return Wrap(impl_->zero); }
GameHandle GameStore::Star() { return Wrap(impl_->star); }
GameHandle GameStore::Up() { return Wrap(impl_->up); }
GameHandle GameStore::Down() { return Wrap(impl_->down); }
GameHandle GameStore::Number(const Dyadic& x) { return Wrap(NumberId(x)); }

GameHandle GameStore::PlusMinus(GameHandle g) {
  CheckHandle(g);
  return Wrap(Intern({g.id()}, {NegateId(g.id())}));
}

GameId GameStore::NumberId(const Dyadic& x) {
  if (auto cached = impl_->numbers.Find(x)) return *cached;
  GameId id;
  if (x.IsInteger()) {
    // Walk outward from the nearest cached integer to keep the recursion flat.
    if (x.IsZero()) {
      id = Intern({}, {});
    } else {
      int step = x.Sign() > 0 ? 1 : -1;
      Dyadic k = x;
      std::vector<Dyadic> pending;
      while (!k.IsZero() && !impl_->numbers.Find(k)) {
        pending.push_back(k);
        k -= Dyadic(step);
      }
      GameId prev = k.IsZero() ? NumberId(Dyadic(0)) : *impl_->numbers.Find(k);
      for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
        prev = step > 0 ? Intern({prev}, {}) : Intern({}, {prev});
        impl_->numeric.Insert(prev, *it);
        impl_->canonical.Insert(prev, prev);
        impl_->numbers.Insert(*it, prev);
      }
      id = prev;
    }
  } else {
    Dyadic ulp = Dyadic::FromParts(1, x.exponent());
    GameId lo = NumberId(x - ulp);
    GameId hi = NumberId(x + ulp);
    id = Intern({lo}, {hi});
  }
  impl_->numeric.Insert(id, x);
  impl_->canonical.Insert(id, id);
  impl_->numbers.Insert(x, id);
  return id;
}

std::vector<GameHandle> GameStore::LeftOptions(GameHandle g) const {
  CheckHandle(g);
  std::vector<GameHandle> out;
  for (GameId id : NodeAt(g.id()).left) out.push_back(Wrap(id));
  return out;
}

std::vector<GameHandle> GameStore::RightOptions(GameHandle g) const {
  CheckHandle(g);
  std::vector<GameHandle> out;
  for (GameId id : NodeAt(g.id()).right) out.push_back(Wrap(id));
  return out;
}

std::size_t GameStore::LeftCount(GameHandle g) const {
  CheckHandle(g);
  return NodeAt(g.id()).left.size();
}

std::size_t GameStore::RightCount(GameHandle g) const {
  CheckHandle(g);
  return NodeAt(g.id()).right.size();
}

// ---------------------------------------------------------------------------
// Arithmetic

GameHandle GameStore::Negate(GameHandle g) {
  CheckHandle(g);
  return Wrap(NegateId(g.id()));
}

GameId GameStore::NegateId(GameId g) {
  if (auto cached = impl_->negation.Find(g)) return *cached;
  const Node& node = NodeAt(g);
  std::vector<GameId> left, right;
  for (GameId r : node.right) left.push_back(NegateId(r));
  for (GameId l : node.left) right.push_back(NegateId(l));
  GameId result = Intern(std::move(left), std::move(right));
  impl_->negation.Insert(g, result);
  impl_->negation.Insert(result, g);
  return result;
}

GameHandle GameStore::Sum(GameHandle g, GameHandle h) {
  CheckHandle(g);
  CheckHandle(h);
  return Wrap(SumId(g.id(), h.id()));
}

GameId GameStore::SumId(GameId g, GameId h) {
  if (g == impl_->zero) return h;
  if (h == impl_->zero) return g;
  std::uint64_t key = internal::UnorderedPairKey(g, h);
  if (auto cached = impl_->sums.Find(key)) return *cached;
  const Node& a = NodeAt(g);
  const Node& b = NodeAt(h);
  std::vector<GameId> left, right;
  for (GameId x : a.left) left.push_back(SumId(x, h));
  for (GameId x : b.left) left.push_back(SumId(g, x));
  for (GameId x : a.right) right.push_back(SumId(x, h));
  for (GameId x : b.right) right.push_back(SumId(g, x));
  GameId result = Intern(std::move(left), std::move(right));
  impl_->sums.Insert(key, result);
  return result;
}

GameHandle GameStore::Add(GameHandle g, GameHandle h) {
  CheckHandle(g);
  CheckHandle(h);
  return Wrap(AddId(g.id(), h.id()));
}

GameId GameStore::AddId(GameId g, GameId h) {
  g = CanonicalId(g);
  h = CanonicalId(h);
  if (g == impl_->zero) return h;
  if (h == impl_->zero) return g;
  std::optional<Dyadic> x = CanonicalNumber(g);
  std::optional<Dyadic> y = CanonicalNumber(h);
  if (x && y) return NumberId(*x + *y);
  std::uint64_t key = internal::UnorderedPairKey(g, h);
  if (auto cached = impl_->adds.Find(key)) return *cached;
  const Node& a = NodeAt(g);
  const Node& b = NodeAt(h);
  std::vector<GameId> left, right;
  // Number avoidance: with x a number and H not, x + H = {x + H^L | x + H^R}.
  if (!x) {
    for (GameId o : a.left) left.push_back(AddId(o, h));
    for (GameId o : a.right) right.push_back(AddId(o, h));
  }
  if (!y) {
    for (GameId o : b.left) left.push_back(AddId(g, o));
    for (GameId o : b.right) right.push_back(AddId(g, o));
  }
  GameId result = CanonicalId(Intern(std::move(left), std::move(right)));
  impl_->adds.Insert(key, result);
  return result;
}

// ---------------------------------------------------------------------------
// Comparison

bool GameStore::Leq(GameHandle g, GameHandle h) {
  CheckHandle(g);
  CheckHandle(h);
  return LeqId(g.id(), h.id());
}

bool GameStore::LeqId(GameId g, GameId h) {
  if (g == h) return true;
  if (auto a = impl_->numeric.Find(g); a && *a) {
    if (auto b = impl_->numeric.Find(h); b && *b) return **a <= **b;
  }
  std::uint64_t key = internal::PairKey(g, h);
  if (auto cached = impl_->leq.Find(key)) return *cached;
  // G <= H unless some G^L >= H or some H^R <= G.
  bool result = true;
  for (GameId gl : NodeAt(g).left) {
    if (LeqId(h, gl)) {
      result = false;
      break;
    }
  }
  if (result) {
    for (GameId hr : NodeAt(h).right) {
      if (LeqId(hr, g)) {
        result = false;
        break;
      }
    }
  }
  impl_->leq.Insert(key, result);
  return result;
}

bool GameStore::LeftWinsMovingFirst(GameHandle g) {
  CheckHandle(g);
  return LeftWinsFirstId(g.id());
}

bool GameStore::RightWinsMovingFirst(GameHandle g) {
  CheckHandle(g);
  return RightWinsFirstId(g.id());
}

bool GameStore::LeftWinsFirstId(GameId g) {
  if (auto cached = impl_->left_first.Find(g)) return *cached;
  bool wins = false;
  for (GameId gl : NodeAt(g).left) {
    if (!RightWinsFirstId(gl)) {
      wins = true;
      break;
    }
  }
  impl_->left_first.Insert(g, wins);
  return wins;
}

bool GameStore::RightWinsFirstId(GameId g) {
  if (auto cached = impl_->right_first.Find(g)) return *cached;
  bool wins = false;
  for (GameId gr : NodeAt(g).right) {
    if (!LeftWinsFirstId(gr)) {
      wins = true;
      break;
    }
  }
  impl_->right_first.Insert(g, wins);
  return wins;
}

Outcome GameStore::OutcomeOf(GameHandle g) {
  CheckHandle(g);
  bool left = LeftWinsFirstId(g.id());
  bool right = RightWinsFirstId(g.id());
  if (left && right) return Outcome::kNext;
  if (left) return Outcome::kLeft;
  if (right) return Outcome::kRight;
  return Outcome::kPrevious;
}

// ---------------------------------------------------------------------------
// Canonical forms

GameHandle GameStore::Canonical(GameHandle g) {
  CheckHandle(g);
  return Wrap(CanonicalId(g.id()));
}

bool GameStore::IsCanonical(GameHandle g) {
  CheckHandle(g);
  return CanonicalId(g.id()) == g.id();
}

std::optional<Dyadic> GameStore::NumberValue(GameHandle g) {
  CheckHandle(g);
  return CanonicalNumber(CanonicalId(g.id()));
}

bool GameStore::IsInteger(GameHandle g) {
  auto x = NumberValue(g);
  return x && x->IsInteger();
}

std::optional<Dyadic> GameStore::CanonicalNumber(GameId canonical) {
  if (auto cached = impl_->numeric.Find(canonical)) return *cached;
  // Every canonical id is registered by CanonicalId or NumberId.
  CanonicalId(canonical);
  return impl_->numeric.Find(canonical).value_or(std::nullopt);
}

GameId GameStore::CanonicalId(GameId g) {
  if (auto cached = impl_->canonical.Find(g)) return *cached;
  const Node& node = NodeAt(g);
  std::vector<GameId> left, right;
  for (GameId o : node.left) left.push_back(CanonicalId(o));
  for (GameId o : node.right) right.push_back(CanonicalId(o));
  SortUnique(left);
  SortUnique(right);

  // Options all numbers with max(L) < min(R): G is the simplest number in
  // between.
  auto as_number = [&](const std::vector<GameId>& l,
                       const std::vector<GameId>& r) -> std::optional<Dyadic> {
    std::optional<Dyadic> lo, hi;
    for (GameId o : l) {
      auto v = impl_->numeric.Find(o).value_or(std::nullopt);
      if (!v) return std::nullopt;
      lo = lo ? Max(*lo, *v) : *v;
    }
    for (GameId o : r) {
      auto v = impl_->numeric.Find(o).value_or(std::nullopt);
      if (!v) return std::nullopt;
      hi = hi ? Min(*hi, *v) : *v;
    }
    if (lo && hi && !(*lo < *hi)) return std::nullopt;
    return SimplestBetween(lo, hi);
  };

  GameId result;
  if (auto x = as_number(left, right)) {
    result = NumberId(*x);
  } else {
    GameId reference = Intern(left, right);  // equal in value to g

    // Bypass reversible Left options: G^L with some G^LR <= G is replaced
    // by the Left options of that G^LR.
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<GameId> next;
      for (GameId gl : left) {
        std::optional<GameId> reverser;
        for (GameId glr : NodeAt(gl).right) {
          if (LeqId(glr, reference)) {
            reverser = glr;
            break;
          }
        }
        if (reverser) {
          const auto& replacement = NodeAt(*reverser).left;
          next.insert(next.end(), replacement.begin(), replacement.end());
          changed = true;
        } else {
          next.push_back(gl);
        }
      }
      SortUnique(next);
      left = std::move(next);
    }
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<GameId> next;
      for (GameId gr : right) {
        std::optional<GameId> reverser;
        for (GameId grl : NodeAt(gr).left) {
          if (LeqId(reference, grl)) {
            reverser = grl;
            break;
          }
        }
        if (reverser) {
          const auto& replacement = NodeAt(*reverser).right;
          next.insert(next.end(), replacement.begin(), replacement.end());
          changed = true;
        } else {
          next.push_back(gr);
        }
      }
      SortUnique(next);
      right = std::move(next);
    }

    // Remove dominated options. Distinct canonical options are never equal,
    // so a <= test against any other option decides domination.
    auto prune = [this](const std::vector<GameId>& options, bool keep_max) {
      std::vector<GameId> kept;
      for (GameId a : options) {
        bool dominated = false;
        for (GameId b : options) {
          if (a == b) continue;
          if (keep_max ? LeqId(a, b) : LeqId(b, a)) {
            dominated = true;
            break;
          }
        }
        if (!dominated) kept.push_back(a);
      }
      return kept;
    };
    left = prune(left, true);
    right = prune(right, false);

    if (auto x = as_number(left, right)) {
      result = NumberId(*x);
    } else {
      result = Intern(std::move(left), std::move(right));
      impl_->numeric.Insert(result, std::nullopt);
      impl_->canonical.Insert(result, result);
    }
  }
  impl_->canonical.Insert(g, result);
  return result;
}

// ---------------------------------------------------------------------------
// Printing

std::string GameStore::Print(GameHandle g) {
  CheckHandle(g);
  return PrintId(g.id());
}

std::string GameStore::PrintId(GameId g) {
  if (CanonicalId(g) == g) {
    if (auto x = CanonicalNumber(g)) return x->ToString();
  }
  if (g == impl_->star) return "*";
  if (g == impl_->up) return "^";
  if (g == impl_->down) return "v";
  const Node& node = NodeAt(g);
  if (node.left.size() == 1 && node.right.size() == 1 &&
      node.left[0] != impl_->zero && node.right[0] == NegateId(node.left[0])) {
    return "±" + PrintId(node.left[0]);
  }
  // Ids depend on creation order, so options are listed in text order.
  auto join = [this](const std::vector<GameId>& options) {
    std::vector<std::string> parts;
    for (GameId o : options) parts.push_back(PrintId(o));
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += ",";
      out += parts[i];
    }
    return out;
  };
  return "{" + join(node.left) + "|" + join(node.right) + "}";
}

}  // namespace cgt
