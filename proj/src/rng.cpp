#include "staircase/rng.hpp"

#include "staircase/angles.hpp"
#include "staircase/error.hpp"

namespace staircase {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) {
    std::uint64_t s = seed;
    state_ = splitmix64(s);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

double Xorshift64Star::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Xorshift64Star::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::vector<double> random_configuration(Xorshift64Star& rng, int m, double margin) {
    if (m <= 0) throw Error(ErrorCode::ArityError, "configuration needs at least one angle");
    if (margin * m >= kTwoPi) throw Error(ErrorCode::ConfigError, "margin too large for arity");
    std::vector<double> z(static_cast<std::size_t>(m));
    for (;;) {
        for (auto& x : z) x = rng.uniform(0.0, kTwoPi);
        if (in_configuration(z, margin)) return z;
    }
}

std::vector<std::vector<double>> sample_configurations(std::uint64_t seed, int m, int count,
                                                       double margin) {
    Xorshift64Star rng(seed);
    std::vector<std::vector<double>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(random_configuration(rng, m, margin));
    return out;
}

}  // namespace staircase
