#pragma once

#include <numbers>
#include <vector>

#include "staircase/boundary_function.hpp"
#include "staircase/group.hpp"

namespace staircase {

struct TailSpec {
    double t_max = 40.0;
    int nodes = 400;
    int per_panel = 20;

    void validate() const;
    // Largest |psi| for which the truncated tail psi * e^{-t_max} stays below 1e-15.
    double psi_bound() const;
};

struct BasepointScheme {
    Triple reference_pos{0.0, std::numbers::pi / 2.0, std::numbers::pi};
    Triple reference_neg{0.0, std::numbers::pi, std::numbers::pi / 2.0};
    double margin = 1e-6;

    void validate() const;
};

struct LineIntegralSpec {
    double nodes_per_unit = 32.0;
    int min_nodes = 64;
    // Nodes per Gauss-Legendre panel when the total count is larger.
    int per_panel = 64;

    void validate() const;
    int node_count(double T) const;
};

struct Basepoint {
    std::vector<double> b;
    GroupElement g;
};

// b = h.z with h sending the leading triple to the reference triple of the same
// orientation; g = h^{-1}, so g.b = z.
Basepoint canonical_basepoint(Angles z, const BasepointScheme& scheme);

// (S psi)(z) = i e^{i z0} int_0^inf psi(0, a_t.(z1 - z0), ...) e^{-t} dt.
BoundaryFunction solve_frobenius_S(const BoundaryFunction& psi, const TailSpec& tail);

enum class CartanVariant {
    Canonical,
    // (a, b) -> (-a, -b) before decomposing.
    SignFlipped,
    // g = (k' k_{-pi}) a_{-T} (k_pi k), integrated over [0, -T].
    NegativeT,
};

struct CauchyOptions {
    bool strict = false;
    double strict_tol = 1e-3;
    FdSpec fd;
    CartanVariant variant = CartanVariant::Canonical;
};

// (R u)(g.b) = int_0^T Re u(a_t k.b) dt with g = k' a_T k; zero when the leading
// triple is degenerate.
BoundaryFunction solve_cauchy_R(const BoundaryFunction& u, const BasepointScheme& scheme,
                                const LineIntegralSpec& line, const CauchyOptions& opts = {});

// int_0^T Re v(a_t.z) dt for either sign of T.
double flow_line_integral(const BoundaryFunction& v, Angles z, double T, const LineIntegralSpec& line);

}  // namespace staircase
