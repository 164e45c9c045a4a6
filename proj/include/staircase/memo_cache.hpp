#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "staircase/angles.hpp"

namespace staircase {

// Bounded cache from quantized angle tuples to values. Sharded, each shard behind
// its own mutex; a shard that reaches capacity is cleared.
class MemoCache {
public:
    static constexpr double kQuantum = 1e-12;

    explicit MemoCache(std::size_t capacity = 1 << 16);

    std::optional<std::complex<double>> find(Angles z) const;
    void insert(Angles z, std::complex<double> v);
    std::size_t size() const;
    std::uint64_t hits() const;

private:
    struct Key {
        int n = 0;
        std::array<std::int64_t, kMaxArity> q{};
        bool operator==(const Key& o) const;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };
    struct Shard {
        mutable std::mutex mu;
        std::unordered_map<Key, std::complex<double>, KeyHash> map;
        mutable std::uint64_t hits = 0;
    };
    static constexpr int kShards = 16;

    static Key make_key(Angles z);

    std::size_t per_shard_;
    mutable std::array<Shard, kShards> shards_;
};

}  // namespace staircase
