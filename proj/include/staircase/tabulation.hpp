#pragma once

#include "staircase/boundary_function.hpp"

namespace staircase {

struct TabulationSpec {
    double tol = 1e-11;
    int degree = 16;
    int initial_panels = 8;
    double min_width = 1e-7;
    int max_panels = 4096;

    void validate() const;
};

struct TabulationStats {
    int panels = 0;
    long evaluations = 0;
};

// For an arity-2 function of declared weight mu, f(z0, z1) = e^{i mu z0} f(0, z1 - z0).
// Samples d -> f(0, d) on (0, 2pi) with adaptive piecewise Chebyshev interpolation and
// returns the interpolant extended back by the weight.
BoundaryFunction tabulate_k_reduced(const BoundaryFunction& f, const TabulationSpec& spec,
                                    TabulationStats* stats = nullptr);

}  // namespace staircase
