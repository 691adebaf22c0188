#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace tensordecomp {

/// Worker count for parallel loops. Defaults to TENSORDECOMP_THREADS, where
/// 0 or unset means std::thread::hardware_concurrency().
unsigned thread_count();
void set_thread_count(unsigned n);

/// Runs body(i) for i in [0, count). Each index is visited exactly once;
/// callers write into pre-sized slots so the merge order stays fixed.
/// The first exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Thread-safe memo table. Values are computed outside the lock; two racing
/// threads may both compute, and the first insert wins.
template <class Key, class Value, class Hash = std::hash<Key>>
class MemoCache {
 public:
  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    if (auto it = map_.find(key); it != map_.end()) return it->second;
    return std::nullopt;
  }

  void insert(const Key& key, Value value) {
    std::unique_lock lock(mutex_);
    map_.insert_or_assign(key, std::move(value));
  }

  template <class Visit>
  void for_each(Visit&& visit) const {
    std::shared_lock lock(mutex_);
    for (const auto& [k, v] : map_) visit(k, v);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace tensordecomp
