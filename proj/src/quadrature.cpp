#include "staircase/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>

#include "staircase/error.hpp"

namespace staircase {

namespace {

constexpr int kMaxGauss = 512;

GaussRule build_gauss(int n) {
    // Newton iteration on P_n from the Chebyshev initial guesses.
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.x[n / 2] = 0.0;
    return r;
}

std::array<std::once_flag, kMaxGauss + 1> g_once;
std::array<std::unique_ptr<GaussRule>, kMaxGauss + 1> g_rules;

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1 || n > kMaxGauss) throw Error(ErrorCode::ConfigError, "Gauss-Legendre order out of range");
    std::call_once(g_once[n], [n] { g_rules[n] = std::make_unique<GaussRule>(build_gauss(n)); });
    return *g_rules[n];
}

const char* rule_name(CircleRule r) { return r == CircleRule::Trapezoid ? "trapezoid" : "panel"; }

CircleRule parse_rule(const std::string& s) {
    if (s == "trapezoid") return CircleRule::Trapezoid;
    if (s == "panel") return CircleRule::Panel;
    throw Error(ErrorCode::ConfigError, "unknown quadrature rule '" + s + "'");
}

void QuadratureSpec::validate() const {
    if (circle_nodes < 8) throw Error(ErrorCode::ConfigError, "quadrature needs at least 8 nodes");
    if (min_arc_nodes < 1 || min_arc_nodes > 512)
        throw Error(ErrorCode::ConfigError, "min_arc_nodes must be in [1, 512]");
}

namespace detail {

int sorted_breaks(Angles breaks, double* out) {
    int n = 0;
    for (double t : breaks) out[n++] = reduce_angle(t);
    std::sort(out, out + n);
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (m == 0 || out[i] - out[m - 1] > kCoincidence) out[m++] = out[i];
    if (m > 1 && out[0] + kTwoPi - out[m - 1] <= kCoincidence) --m;
    return m;
}

}  // namespace detail

}  // namespace staircase
