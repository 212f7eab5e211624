#pragma once

#include <map>
#include <memory>
#include <mutex>

namespace polylie::symbolic {

/// Insert-once cache. Values are computed outside the lock so computations
/// may recurse into the same cache; concurrent duplicates keep the first.
template <class K, class V>
class Memo {
 public:
  template <class F>
  const V& get(const K& key, F&& compute) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return *it->second;
    }
    auto value = std::make_unique<V>(compute());
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = map_.emplace(key, std::move(value));
    return *it->second;
  }

 private:
  std::mutex mutex_;
  std::map<K, std::unique_ptr<V>> map_;
};

}  // namespace polylie::symbolic
