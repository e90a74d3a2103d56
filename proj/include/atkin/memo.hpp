#ifndef ATKIN_MEMO_HPP
#define ATKIN_MEMO_HPP

#include <map>
#include <mutex>
#include <utility>

namespace atkin::detail
{

// Write-once cache: the value is computed outside the lock, and the first
// insertion wins. Concurrent computations of the same key produce equal values.
template <class Key, class Value>
class memo
{
public:
    template <class Fn>
    Value get(const Key &key, Fn &&compute)
    {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = table_.find(key);
            if (it != table_.end()) {
                return it->second;
            }
        }
        Value v = compute();
        std::lock_guard<std::mutex> lock(mu_);
        return table_.emplace(key, std::move(v)).first->second;
    }

    void clear()
    {
        std::lock_guard<std::mutex> lock(mu_);
        table_.clear();
    }

private:
    std::mutex mu_;
    std::map<Key, Value> table_;
};

} // namespace atkin::detail

#endif
