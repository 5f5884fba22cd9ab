#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace qrc {

/// Concurrent memo table. Values are immutable once inserted; lookups take a
/// shared lock, insertions an exclusive one, so parallel suite workers can
/// share the table. Results are schedule-independent because insertions of
/// the same key always carry the same value.
template <typename K, typename V>
class Memo {
public:
    bool find(const K& key, V& out) const {
        std::shared_lock lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void insert(const K& key, const V& value) {
        std::unique_lock lock(mu_);
        map_.emplace(key, value);
    }

private:
    mutable std::shared_mutex mu_;
    std::map<K, V> map_;
};

}  // namespace qrc
