#pragma once

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace greenring::detail {

/// Unbounded memo table shared between threads.
///
/// Writes are idempotent: when two threads race on the same key the first
/// stored value wins and both callers see it. References stay valid for the
/// table's lifetime (entries are never erased; unordered_map nodes are stable).
template <typename Value>
class MemoTable {
 public:
  const Value* find(std::uint64_t key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
  }

  const Value& insert(std::uint64_t key, Value value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, Value> table_;
};

inline std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (std::uint64_t{a} << 32) | b;
}

}  // namespace greenring::detail
