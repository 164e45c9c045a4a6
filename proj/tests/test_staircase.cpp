#include <doctest.h>

#include <cmath>
#include <numbers>

#include "staircase/checks.hpp"
#include "staircase/error.hpp"
#include "staircase/rng.hpp"

using namespace staircase;

namespace {

BoundaryFunction invariant_quadruple() {
    Traits t;
    t.g_invariant = true;
    return BoundaryFunction(4, Codomain::real(0),
                            real_function(4, [](Angles z) {
                                return orientation(z[0], z[1], z[2]) * orientation(z[0], z[2], z[3]) +
                                       0.5 * orientation(z[1], z[2], z[3]);
                            }).node_ptr(),
                            t);
}

StaircaseConfig coarse() {
    StaircaseConfig cfg;
    cfg.quad.circle_nodes = 16;
    return cfg;
}

}  // namespace

TEST_CASE("degree and precondition errors") {
    auto orr = orientation_cocycle();
    CHECK_THROWS_AS(staircase_stages(orr, StaircaseConfig{}), Error);
    try {
        primitive_P(coboundary(smooth_test_function(4), false), StaircaseConfig{});
        FAIL("expected a precondition error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionViolated);
    }
    try {
        primitive_P(smooth_test_function(5), StaircaseConfig{});
        FAIL("expected a precondition error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PreconditionViolated);
    }
}

TEST_CASE("zero cocycle has zero primitive") {
    auto p = primitive_P(zero_function(5), StaircaseConfig{});
    for (const auto& z : sample_configurations(1, 4, 20, 0.1)) CHECK(std::abs(p(z)) < 1e-10);
    auto rep = verify_primitive(zero_function(5), zero_function(4), 10, 1, 0.1);
    CHECK(rep.sup_residual == 0.0);
    CHECK(rep.passed);
}

TEST_CASE("verify_primitive on exact primitives") {
    auto q = invariant_quadruple();
    auto c = coboundary(q, false);
    VerifyOptions vo;
    auto rep = verify_primitive(c, q, 50, 2, 0.05, vo);
    CHECK(rep.sup_residual == 0.0);
    CHECK(rep.sup_invariance.value_or(1.0) == 0.0);

    // shifting by a coboundary leaves delta p unchanged
    auto shifted = q + coboundary(smooth_test_function(3), false);
    vo.check_invariance = false;
    auto rs = verify_primitive(c, shifted, 50, 2, 0.05, vo);
    CHECK(rs.sup_residual < 1e-12);
    CHECK_FALSE(rs.sup_invariance.has_value());

    CHECK_THROWS_AS(verify_primitive(c, smooth_test_function(3), 5, 2, 0.1), Error);
}

TEST_CASE("serial and parallel evaluation give identical reports") {
    auto q = invariant_quadruple();
    auto c = coboundary(q, false);
    auto shifted = q + coboundary(smooth_test_function(3), false);
    VerifyOptions ser, par;
    ser.execution = Execution::Serial;
    auto a = verify_primitive(c, shifted, 40, 3, 0.1, ser);
    auto b = verify_primitive(c, shifted, 40, 3, 0.1, par);
    CHECK(to_json(a).dump() == to_json(b).dump());
    auto f = smooth_test_function(4);
    CHECK(estimate_sup(f, 200, 4, 0.1, Execution::Serial) == estimate_sup(f, 200, 4, 0.1, Execution::Parallel));
}

TEST_CASE("estimate_sup") {
    CHECK(estimate_sup(orientation_cocycle(), 200, 1, 0.01) == 1.0);
    CHECK(estimate_sup(zero_function(3), 50, 1, 0.01) == 0.0);
    auto f = smooth_test_function(3);
    CHECK(estimate_sup(f, 400, 1, 0.0) >= estimate_sup(f, 200, 1, 0.0));
}

TEST_CASE("coarse or-cup-or staircase") {
    auto orr = orientation_cocycle();
    auto c = cup(orr, orr);
    auto st = staircase_stages(c, coarse());
    CHECK(st.tabulated);
    CHECK(st.p.arity() == 4);
    auto rep = verify_primitive(c, st.p, 4, 5, 0.15);
    INFO("dp-c ", rep.sup_residual, " |Lp| ", rep.sup_invariance.value_or(-1));
    CHECK(rep.sup_residual < 1e-10);
    CHECK(rep.sup_invariance.value_or(1.0) < 1e-3);

    // reducible case: (I L I c)_K pi / i equals or_K
    auto red = k_reduce(st.ilic), orr_k = k_reduce(orr);
    for (const auto& z : sample_configurations(5, 2, 10, 0.15))
        CHECK(std::abs(red(z) * std::numbers::pi / cplx(0, 1) - orr_k(z)) < 1e-3);  // quadrature level at N = 16

    // intermediates
    auto du = coboundary(st.u, false);
    for (const auto& z : sample_configurations(6, 4, 4, 0.15)) CHECK(std::abs(du(z) - st.lic(z)) < 1e-3);
}

TEST_CASE("degree-6 spot check") {
    auto orr = orientation_cocycle();
    auto c = cup(cup(orr, orr), orr);
    auto p = primitive_P(c, StaircaseConfig{});
    VerifyOptions vo;
    vo.expand_coboundary = false;
    vo.check_invariance = false;
    vo.record_values = false;
    auto rep = verify_primitive(c, p, 20, 7, 0.15, vo);
    CHECK(rep.sup_residual < 0.1);
}
