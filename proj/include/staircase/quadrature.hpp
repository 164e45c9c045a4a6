#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "staircase/angles.hpp"

namespace staircase {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

// Cached for n in [1, 512]; thread-safe.
const GaussRule& gauss_legendre(int n);

enum class CircleRule {
    Trapezoid,
    // Gauss-Legendre on each arc cut out by the remaining arguments.
    Panel,
};

const char* rule_name(CircleRule r);
CircleRule parse_rule(const std::string& s);

struct QuadratureSpec {
    int circle_nodes = 256;
    CircleRule rule = CircleRule::Trapezoid;
    // Panel rule only: each of the k arcs gets max(min_arc_nodes, ceil(N / k)) nodes. The
    // count does not depend on arc lengths, so the rule varies smoothly with the breaks.
    int min_arc_nodes = 4;

    void validate() const;
};

// Calls fn(eta, weight) for every node of the normalized circle measure d eta / 2pi.
// `breaks` are the angles where the integrand may jump (used by the panel rule).
template <class Fn>
void for_each_circle_node(const QuadratureSpec& q, Angles breaks, Fn&& fn);

// Composite Gauss-Legendre on [lo, hi] with `total` nodes split into panels of at most
// `per_panel` nodes. Calls fn(t, weight).
template <class Fn>
void for_each_interval_node(double lo, double hi, int total, int per_panel, Fn&& fn);

namespace detail {
int sorted_breaks(Angles breaks, double* out);
}

template <class Fn>
void for_each_circle_node(const QuadratureSpec& q, Angles breaks, Fn&& fn) {
    if (q.rule == CircleRule::Trapezoid || breaks.empty()) {
        const int n = q.circle_nodes;
        const double w = 1.0 / n;
        const double step = kTwoPi / n;
        for (int k = 0; k < n; ++k) fn(k * step, w);
        return;
    }
    double b[kMaxArity + 1];
    int nb = detail::sorted_breaks(breaks, b);
    int n = (q.circle_nodes + nb - 1) / nb;
    if (n < q.min_arc_nodes) n = q.min_arc_nodes;
    if (n > 512) n = 512;
    for (int i = 0; i < nb; ++i) {
        double lo = b[i];
        double hi = i + 1 < nb ? b[i + 1] : b[0] + kTwoPi;
        double len = hi - lo;
        const GaussRule& g = gauss_legendre(n);
        double half = 0.5 * len, mid = lo + half, scale = half / kTwoPi;
        for (int k = 0; k < n; ++k) fn(mid + half * g.x[k], scale * g.w[k]);
    }
}

template <class Fn>
void for_each_interval_node(double lo, double hi, int total, int per_panel, Fn&& fn) {
    if (total <= 0 || hi == lo) return;
    int panels = (total + per_panel - 1) / per_panel;
    int n = (total + panels - 1) / panels;
    const GaussRule& g = gauss_legendre(n);
    double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        double a = lo + p * width;
        double half = 0.5 * width, mid = a + half;
        for (int k = 0; k < n; ++k) fn(mid + half * g.x[k], half * g.w[k]);
    }
}

}  // namespace staircase
