#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace orderpoly {

/// Memo table keyed by canonical poset encodings.
/// Concurrent lookups take a shared lock; inserts take an exclusive one.
template <class Value>
class Memo {
public:
    std::optional<Value> find(const std::string& key) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void insert(const std::string& key, Value value)
    {
        std::unique_lock lock(mutex_);
        table_.emplace(key, std::move(value));
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, Value> table_;
};

} // namespace orderpoly
