#pragma once

#include <cstdint>
#include <vector>

namespace staircase {

std::uint64_t splitmix64(std::uint64_t& state);

// xorshift64* (Vigna 2016): shifts 12, 25, 27 and multiplier 0x2545F4914F6CDD1D.
// The state is seeded with one splitmix64 step of the user seed, so seed 0 is valid.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed);
    std::uint64_t next();
    // Top 53 bits scaled to [0, 1).
    double uniform();
    double uniform(double lo, double hi);

private:
    std::uint64_t state_;
};

// Draws m uniform angles in [0, 2pi), rejecting tuples whose minimal pairwise
// separation is below margin.
std::vector<double> random_configuration(Xorshift64Star& rng, int m, double margin);

// The first `count` points of the seeded stream; the sequence for a fixed seed
// is a prefix of the sequence for any larger count.
std::vector<std::vector<double>> sample_configurations(std::uint64_t seed, int m, int count,
                                                       double margin);

}  // namespace staircase
