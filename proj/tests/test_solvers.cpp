#include <doctest.h>

#include <cmath>
#include <numbers>

#include "staircase/checks.hpp"
#include "staircase/error.hpp"
#include "staircase/rng.hpp"

using namespace staircase;
using std::numbers::pi;

TEST_CASE("canonical basepoints") {
    BasepointScheme scheme;
    std::vector<double> z{0, pi / 2, pi, 1.0};
    auto bp = canonical_basepoint(z, scheme);
    for (int j = 0; j < 4; ++j) CHECK(circle_distance(bp.b[j], z[j]) < 1e-12);
    CHECK(element_distance(bp.g, identity_element()) < 1e-10);

    double t = 2.2, th = 5.0;
    std::vector<double> rot{t, pi / 2 + t, pi + t, th + t};
    auto br = canonical_basepoint(rot, scheme);
    CHECK(circle_distance(br.b[3], th) < 1e-10);
    CHECK(element_distance(br.g, one_param(Flow::K, t)) < 1e-10);

    std::vector<double> neg{0, pi, pi / 2, 4.0};
    auto bn = canonical_basepoint(neg, scheme);
    CHECK(circle_distance(bn.b[1], pi) == 0.0);
    CHECK(circle_distance(bn.b[2], pi / 2) == 0.0);

    CHECK_THROWS_AS(canonical_basepoint(std::vector<double>{0, 1e-9, 2, 3}, scheme), Error);
}

TEST_CASE("tail spec enforces the truncation bound") {
    TailSpec t;
    t.t_max = 10;
    CHECK_THROWS_AS(t.validate(), Error);
    CHECK_NOTHROW(TailSpec{}.validate());
}

TEST_CASE("Frobenius solver S") {
    TailSpec tail;
    auto one = solve_frobenius_S(constant(1, 1.0), tail);
    for (double th : {0.0, 1.0, 4.0}) CHECK(std::abs(one({th}) - cplx(0, 1) * std::polar(1.0, th)) < 1e-12);
    CHECK(solve_frobenius_S(zero_function(2), tail).is_zero());

    FdSpec fd;
    auto psi = smooth_k_invariant(2, 1);
    auto qs = frobenius_Q(solve_frobenius_S(psi, tail), fd);
    for (const auto& z : sample_configurations(2, 2, 30, 0.1)) CHECK(std::abs(qs(z).real() - psi(z).real()) < 1e-5);
}

TEST_CASE("Cauchy solver R") {
    BasepointScheme scheme;
    LineIntegralSpec line;
    CHECK(solve_cauchy_R(zero_function(3, Codomain::weighted(1)), scheme, line).is_zero());

    FdSpec fd4{1e-4, FdScheme::Central4, true};
    auto f = smooth_k_invariant(4, 1);
    auto ru = solve_cauchy_R(cauchy_L(f, fd4), scheme, line);
    for (const auto& z : sample_configurations(3, 4, 20, 0.1)) {
        auto bp = canonical_basepoint(z, scheme);
        CHECK(ru(bp.b) == cplx(0.0, 0.0));
        CHECK(std::abs(ru(z).real() - (f(z).real() - f(bp.b).real())) < 1e-8);
    }
    // degenerate leading triple: value 0 by convention
    CHECK(ru({0.0, 0.0, 1.0, 2.0}) == cplx(0.0, 0.0));
}

TEST_CASE("strict mode rejects u outside the kernel of Q") {
    auto u = from_callable(3, Codomain::weighted(1),
                           [](Angles z) { return std::polar(1.0, z[0]) * std::cos(z[1] - z[2]); });
    CauchyOptions strict;
    strict.strict = true;
    auto r = solve_cauchy_R(u, BasepointScheme{}, LineIntegralSpec{}, strict);
    CHECK_THROWS_AS(r({0.3, 2.0, 4.0}), Error);

    FdSpec fd4{1e-4, FdScheme::Central4, true};
    auto ok = solve_cauchy_R(cauchy_L(smooth_k_invariant(3), fd4), BasepointScheme{}, LineIntegralSpec{}, strict);
    CHECK_NOTHROW(ok({0.3, 2.0, 4.0}));
}

TEST_CASE("solver identities") {
    SolverCheckParams p;
    p.samples = 30;
    p.seed = 4;
    p.tame_pairs = 20;
    for (const auto& r : check_solvers(p)) {
        INFO(r.identity_name, " sup ", r.sup_residual, " ", r.note);
        CHECK(r.passed);
    }
}

TEST_CASE("line integral is additive and odd in T") {
    auto v = smooth_k_invariant(3);
    LineIntegralSpec line;
    std::vector<double> z{0.5, 2.0, 4.1};
    double a = flow_line_integral(v, z, 1.5, line);
    double b = flow_line_integral(v, z, -1.5, line);
    std::vector<double> moved(3);
    for (int j = 0; j < 3; ++j) moved[j] = flow_angle(Flow::A, -1.5, z[j]);
    double back = flow_line_integral(v, moved, 1.5, line);
    CHECK(std::abs(flow_line_integral(v, moved, 3.0, line) - (back + a)) < 1e-9);
    CHECK(std::abs(b + back) < 1e-9);
    CHECK(flow_line_integral(v, z, 0.0, line) == 0.0);
}

TEST_CASE("K-reduced tables reproduce their source") {
    auto psi = or_derived_psi();
    TabulationStats stats;
    auto table = tabulate_k_reduced(psi, TabulationSpec{}, &stats);
    CHECK(stats.panels > 0);
    CHECK(table.weight() == 0);
    for (const auto& z : sample_configurations(5, 2, 50, 0.05)) CHECK(std::abs(table(z) - psi(z)) < 1e-9);

    auto f = k_extend(smooth_test_function(1), 1);
    auto ft = tabulate_k_reduced(f, TabulationSpec{});
    for (const auto& z : sample_configurations(6, 2, 50, 0.0)) CHECK(std::abs(ft(z) - f(z)) < 1e-10);
    CHECK_THROWS_AS(tabulate_k_reduced(smooth_test_function(3), TabulationSpec{}), Error);
}
