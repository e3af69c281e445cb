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

#ifndef CGT_SRC_SHARDED_MAP_H_
#define CGT_SRC_SHARDED_MAP_H_

#include <array>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace cgt::internal {

// Memo table shared between threads. Values are computed outside the lock,
// so two threads may race to fill the same key; callers only store
// deterministic results, which makes the race benign.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class ShardedMap {
 public:
  std::optional<Value> Find(const Key& key) const {
    const Shard& shard = ShardFor(key);
    std::lock_guard<std::mutex> lock(shard.mu);
    auto it = shard.map.find(key);
    if (it == shard.map.end()) return std::nullopt;
    return it->second;
  }

  void Insert(const Key& key, const Value& value) {
    Shard& shard = ShardFor(key);
    std::lock_guard<std::mutex> lock(shard.mu);
    shard.map.emplace(key, value);
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const Shard& shard : shards_) {
      std::lock_guard<std::mutex> lock(shard.mu);
      n += shard.map.size();
    }
    return n;
  }

 private:
  static constexpr std::size_t kShards = 16;

  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<Key, Value, Hash> map;
  };

  Shard& ShardFor(const Key& key) {
    return shards_[Mix(Hash{}(key)) % kShards];
  }
  const Shard& ShardFor(const Key& key) const {
    return shards_[Mix(Hash{}(key)) % kShards];
  }
  static std::size_t Mix(std::size_t h) {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
  }

  std::array<Shard, kShards> shards_;
};

inline std::uint64_t PairKey(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

inline std::uint64_t UnorderedPairKey(std::uint32_t a, std::uint32_t b) {
  return a < b ? PairKey(a, b) : PairKey(b, a);
}

}  // namespace cgt::internal

#endif  // CGT_SRC_SHARDED_MAP_H_
