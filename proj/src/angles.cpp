#include "staircase/angles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace staircase {

double reduce_angle(double theta) {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double circle_distance(double a, double b) {
    double d = reduce_angle(a - b);
    return std::min(d, kTwoPi - d);
}

double min_separation(Angles z) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            best = std::min(best, circle_distance(z[i], z[j]));
    return best;
}

bool in_configuration(Angles z, double margin) { return min_separation(z) >= margin; }

int orientation(double z0, double z1, double z2) {
    // Walking counter-clockwise from z0 we must meet z1 before z2.
    double d1 = reduce_angle(z1 - z0);
    double d2 = reduce_angle(z2 - z0);
    if (std::min(d1, kTwoPi - d1) < kCoincidence || std::min(d2, kTwoPi - d2) < kCoincidence ||
        circle_distance(z1, z2) < kCoincidence)
        return 0;
    return d1 < d2 ? 1 : -1;
}

}  // namespace staircase
