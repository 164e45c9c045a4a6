#include "staircase/memo_cache.hpp"

#include <cmath>

namespace staircase {

MemoCache::MemoCache(std::size_t capacity) : per_shard_(capacity / kShards + 1) {}

bool MemoCache::Key::operator==(const Key& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
        if (q[i] != o.q[i]) return false;
    return true;
}

std::size_t MemoCache::KeyHash::operator()(const Key& k) const {
    std::uint64_t h = 0xCBF29CE484222325ULL ^ static_cast<std::uint64_t>(k.n);
    for (int i = 0; i < k.n; ++i) {
        h ^= static_cast<std::uint64_t>(k.q[i]) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h *= 0x100000001B3ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

MemoCache::Key MemoCache::make_key(Angles z) {
    Key k;
    k.n = static_cast<int>(z.size());
    for (int i = 0; i < k.n; ++i) {
        auto q = std::llround(reduce_angle(z[i]) / kQuantum);
        if (q >= std::llround(kTwoPi / kQuantum)) q = 0;
        k.q[i] = q;
    }
    return k;
}

std::optional<std::complex<double>> MemoCache::find(Angles z) const {
    Key k = make_key(z);
    Shard& s = shards_[KeyHash{}(k) % kShards];
    std::lock_guard lock(s.mu);
    auto it = s.map.find(k);
    if (it == s.map.end()) return std::nullopt;
    ++s.hits;
    return it->second;
}

void MemoCache::insert(Angles z, std::complex<double> v) {
    Key k = make_key(z);
    Shard& s = shards_[KeyHash{}(k) % kShards];
    std::lock_guard lock(s.mu);
    if (s.map.size() >= per_shard_) s.map.clear();
    s.map.emplace(k, v);
}

std::size_t MemoCache::size() const {
    std::size_t n = 0;
    for (auto& s : shards_) {
        std::lock_guard lock(s.mu);
        n += s.map.size();
    }
    return n;
}

std::uint64_t MemoCache::hits() const {
    std::uint64_t n = 0;
    for (auto& s : shards_) {
        std::lock_guard lock(s.mu);
        n += s.hits;
    }
    return n;
}

}  // namespace staircase
