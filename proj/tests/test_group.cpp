#include <doctest.h>

#include <cmath>
#include <numbers>

#include "staircase/checks.hpp"
#include "staircase/error.hpp"
#include "staircase/group.hpp"
#include "staircase/rng.hpp"

using namespace staircase;
using std::numbers::pi;

namespace {
double det_defect(const GroupElement& g) { return std::abs(std::norm(g.a) - std::norm(g.b) - 1.0); }
}  // namespace

TEST_CASE("make_element normalizes projectively") {
    CHECK(same_element(make_element({1, 0}, {0, 0}), identity_element()));
    auto g = make_element({2, 0}, {0, 0});
    CHECK(same_element(g, identity_element()));
    CHECK(det_defect(g) < 1e-12);

    auto neg = make_element({-1.5, 0.2}, {0.3, -1.0});
    CHECK(neg.a.real() >= 0.0);
    CHECK(det_defect(neg) < 1e-12);
    CHECK(same_element(neg, make_element({1.5, -0.2}, {-0.3, 1.0})));

    // the a_t convention has cosh(-t/2), sinh(-t/2)
    CHECK(same_element(make_element({std::cosh(0.5), 0}, {std::sinh(0.5), 0}), one_param(Flow::A, -1.0)));
    CHECK_THROWS_AS(make_element({1, 0}, {1, 0}), Error);
}

TEST_CASE("one-parameter subgroups") {
    CHECK(same_element(one_param(Flow::K, 0.0), identity_element()));
    auto n1 = one_param(Flow::N, 1.0);
    CHECK(std::abs(n1.a - cplx(1.0, 0.5)) < 1e-15);
    CHECK(std::abs(n1.b - cplx(0.0, -0.5)) < 1e-15);
    CHECK(same_element(compose(one_param(Flow::K, pi / 3), one_param(Flow::K, pi / 6)), one_param(Flow::K, pi / 2)));
    for (double s : {-2.5, 0.3, 1.7})
        CHECK(element_distance(compose(one_param(Flow::A, s), compose(one_param(Flow::N, 0.8), one_param(Flow::A, -s))),
                               one_param(Flow::N, std::exp(-s) * 0.8)) < 1e-12);
}

TEST_CASE("compose and inverse") {
    Xorshift64Star rng(7);
    CHECK(same_element(inverse(identity_element()), identity_element()));
    CHECK(same_element(inverse(one_param(Flow::K, 0.7)), one_param(Flow::K, -0.7)));
    for (int i = 0; i < 50; ++i) {
        auto g = compose(one_param(Flow::K, rng.uniform(0, 2 * pi)),
                         compose(one_param(Flow::A, rng.uniform(-3, 3)), one_param(Flow::N, rng.uniform(-3, 3))));
        CHECK(same_element(compose(g, identity_element()), g));
        CHECK(element_distance(compose(g, inverse(g)), identity_element()) < 1e-12);
        CHECK(det_defect(g) < 1e-12);
    }
}

TEST_CASE("boundary action") {
    for (double t : {-3.0, 0.4, 2.0, 9.0}) {
        CHECK(circle_distance(act_angle(one_param(Flow::K, t), 1.1), reduce_angle(1.1 + t)) < 1e-12);
        CHECK(circle_distance(act_angle(one_param(Flow::A, t), 0.0), 0.0) < 1e-12);
        CHECK(circle_distance(act_angle(one_param(Flow::A, t), pi), pi) < 1e-12);
        CHECK(circle_distance(act_angle(one_param(Flow::N, t), 0.0), 0.0) < 1e-12);
    }
    double x = act_angle(one_param(Flow::A, 2.0), 5.0);
    CHECK(x >= 0.0);
    CHECK(x < 2 * pi);
}

TEST_CASE("flow_angle matches the matrix action and stays finite for long flows") {
    for (Flow f : {Flow::K, Flow::A, Flow::N})
        for (double t : {-4.0, -0.5, 0.0, 1.3, 6.0})
            for (double th : {0.0, 0.7, 3.0, 5.9})
                CHECK(circle_distance(flow_angle(f, t, th), act_angle(one_param(f, t), th)) < 1e-10);
    // pi attracts under a_t for t -> +inf, 0 for t -> -inf
    CHECK(circle_distance(flow_angle(Flow::A, 80.0, 1.0), pi) < 1e-12);
    CHECK(circle_distance(flow_angle(Flow::A, -80.0, 1.0), 0.0) < 1e-12);
    CHECK(std::isfinite(flow_angle(Flow::A, 700.0, 0.5)));
}

TEST_CASE("iwasawa and cartan coordinates") {
    auto id = iwasawa(identity_element());
    CHECK(std::abs(id.tK) + std::abs(id.tA) + std::abs(id.tN) < 1e-14);
    auto at = iwasawa(one_param(Flow::A, 1.25));
    CHECK(std::abs(at.tK) < 1e-12);
    CHECK(std::abs(at.tA - 1.25) < 1e-12);
    CHECK(std::abs(at.tN) < 1e-12);

    CHECK(cartan(identity_element()).T < 1e-14);
    auto neg = one_param(Flow::A, -2.0);
    auto c = cartan(neg);
    CHECK(c.T >= 0.0);
    CHECK(std::abs(c.T - 2.0) < 1e-12);
    CHECK(element_distance(recompose(c), neg) < 1e-10);
}

TEST_CASE("map_triple") {
    Triple src{0.3, 1.9, 4.0};
    CHECK(element_distance(map_triple(src, src), identity_element()) < 1e-10);
    double t = 0.9;
    auto k = map_triple({0, pi / 2, pi}, {t, pi / 2 + t, pi + t});
    CHECK(element_distance(k, one_param(Flow::K, t)) < 1e-10);
    CHECK_THROWS_AS(map_triple({0, 0, 1}, {0, 1, 2}), Error);
    CHECK_THROWS_AS(map_triple({0, 1, 2}, {0, 2, 1}), Error);
}

TEST_CASE("group identities on 1000 random elements") {
    for (const auto& r : check_group({1000, 11})) {
        INFO(r.identity_name, " sup ", r.sup_residual);
        CHECK(r.passed);
        CHECK(r.samples == 1000);
    }
}
