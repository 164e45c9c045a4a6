#pragma once

#include <numbers>
#include <span>

namespace staircase {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Pairs of reduced angles closer than this count as coincident.
inline constexpr double kCoincidence = 1e-13;

// Upper bound on the number of circle arguments of any evaluator.
inline constexpr int kMaxArity = 16;

using Angles = std::span<const double>;

// Reduce to [0, 2pi).
double reduce_angle(double theta);

// Length of the shorter arc between two angles.
double circle_distance(double a, double b);

// Smallest pairwise circle distance; +inf for fewer than two angles.
double min_separation(Angles z);

bool in_configuration(Angles z, double margin);

// +1 for counter-clockwise (z0, z1, z2), -1 for clockwise, 0 if two coincide.
int orientation(double z0, double z1, double z2);

}  // namespace staircase
