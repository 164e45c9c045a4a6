#include "staircase/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "staircase/error.hpp"
#include "staircase/rng.hpp"

namespace staircase {

namespace {

using Points = std::vector<std::vector<double>>;

template <class Fn>
std::vector<double> residuals(const Points& pts, Fn&& fn) {
    std::vector<double> r(pts.size());
    parallel_for(static_cast<long>(pts.size()), [&](long i) { r[i] = fn(Angles(pts[i])); });
    return r;
}

ConfigEcho echo_of(std::initializer_list<std::pair<const char*, std::string>> kv) {
    ConfigEcho e;
    for (const auto& [k, v] : kv) e.emplace_back(k, v);
    return e;
}

std::string str(double v) { return format_double(v); }
std::string str(int v) { return std::to_string(v); }

GroupElement random_element(Xorshift64Star& rng) {
    double u = rng.uniform(0.0, kTwoPi), v = rng.uniform(-3.0, 3.0), w = rng.uniform(-3.0, 3.0);
    return compose(one_param(Flow::K, u), compose(one_param(Flow::A, v), one_param(Flow::N, w)));
}

std::vector<double> act_all(const GroupElement& g, Angles z) {
    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = act_angle(g, z[i]);
    return out;
}

double closed_form_I_or(double t0, double t1) {
    if (circle_distance(t0, t1) < kCoincidence) return 0.0;
    return reduce_angle(t0 - t1) / std::numbers::pi - 1.0;
}

// G-invariant function on four points built from orientations.
BoundaryFunction invariant_quadruple() {
    Traits t;
    t.g_invariant = true;
    return BoundaryFunction(
        4, Codomain::real(0),
        from_callable(
            4, Codomain::real(0),
            [](Angles z) {
                return cplx(orientation(z[0], z[1], z[2]) * orientation(z[0], z[2], z[3]) +
                                0.5 * orientation(z[1], z[2], z[3]),
                            0.0);
            })
            .node_ptr(),
        t);
}

}  // namespace

BoundaryFunction smooth_test_function(int arity, int variant) {
    const double shift = 0.3 + 0.17 * variant;
    return real_function(arity, [arity, shift](Angles z) {
        double s = 0.0;
        for (int j = 0; j < arity; ++j) {
            s += std::sin((j + 1) * z[j] + shift);
            if (j + 1 < arity) s += 0.5 * std::cos(z[j] - 2.0 * z[j + 1] + shift) * std::sin(z[j + 1]);
        }
        return s;
    });
}

BoundaryFunction smooth_k_invariant(int arity, int variant) {
    const double shift = 0.2 + 0.11 * variant;
    auto f = real_function(arity, [arity, shift](Angles z) {
        double s = 0.0;
        for (int j = 0; j < arity; ++j)
            for (int k = j + 1; k < arity; ++k)
                s += std::cos(z[j] - z[k] + shift * (j + k)) + 0.3 * std::sin(2.0 * (z[k] - z[j]));
        return s;
    });
    return BoundaryFunction(arity, Codomain::real(0), f.node_ptr());
}

BoundaryFunction or_derived_psi() {
    auto f = (1.0 / std::numbers::pi) * contraction_I(orientation_cocycle(), QuadratureSpec{16, CircleRule::Panel, 4});
    return BoundaryFunction(2, Codomain::real(0), f.node_ptr(), f.traits());
}

std::vector<VerificationReport> check_group(const GroupCheckParams& p) {
    Xorshift64Star rng(p.seed);
    std::vector<double> iw, ca, conj, hom, add, tri, inv;
    for (int i = 0; i < p.samples; ++i) {
        GroupElement g = random_element(rng), h = random_element(rng);
        double theta = rng.uniform(0.0, kTwoPi);
        iw.push_back(element_distance(recompose(iwasawa(g)), g));
        ca.push_back(element_distance(recompose(cartan(g)), g));
        double s = rng.uniform(-3.0, 3.0), t = rng.uniform(-3.0, 3.0);
        GroupElement as = one_param(Flow::A, s);
        conj.push_back(element_distance(compose(as, compose(one_param(Flow::N, t), inverse(as))),
                                        one_param(Flow::N, std::exp(-s) * t)));
        hom.push_back(circle_distance(act_angle(compose(g, h), theta), act_angle(g, act_angle(h, theta))));
        double a = 0.0;
        for (Flow f : {Flow::K, Flow::A, Flow::N})
            a = std::max(a, element_distance(compose(one_param(f, s), one_param(f, t)), one_param(f, s + t)));
        add.push_back(a);
        inv.push_back(element_distance(compose(g, inverse(g)), identity_element()));
        auto src = random_configuration(rng, 3, 1e-2);
        std::vector<double> dst = act_all(g, src);
        GroupElement m = map_triple({src[0], src[1], src[2]}, {dst[0], dst[1], dst[2]});
        double e = 0.0;
        for (int j = 0; j < 3; ++j) e = std::max(e, circle_distance(act_angle(m, src[j]), dst[j]));
        tri.push_back(e);
    }
    ConfigEcho echo = echo_of({{"samples", str(p.samples)}});
    return {
        make_report("iwasawa_recomposition", iw, 1e-10, p.seed, echo),
        make_report("cartan_recomposition", ca, 1e-10, p.seed, echo),
        make_report("a_normalizes_n", conj, 1e-10, p.seed, echo),
        make_report("action_homomorphism", hom, 1e-10, p.seed, echo),
        make_report("one_param_additivity", add, 1e-12, p.seed, echo),
        make_report("inverse", inv, 1e-12, p.seed, echo),
        make_report("map_triple_roundtrip", tri, 1e-9, p.seed, echo),
    };
}

std::vector<VerificationReport> check_contraction(const ContractionCheckParams& p) {
    std::vector<VerificationReport> out;
    auto identity = [&](const BoundaryFunction& f, const QuadratureSpec& q) {
        auto lhs = contraction_I(coboundary(f), q, false) + coboundary(contraction_I(f, q, false));
        auto pts = sample_configurations(p.seed, f.arity(), p.samples, p.margin);
        return residuals(pts, [&](Angles z) { return std::abs(lhs(z) - f(z)); });
    };
    QuadratureSpec smooth_q{p.smooth_nodes, CircleRule::Trapezoid, 4};
    QuadratureSpec or_q{p.or_nodes, CircleRule::Trapezoid, 4};
    out.push_back(make_report("contraction_identity_smooth", identity(smooth_test_function(3), smooth_q), 2e-6,
                              p.seed, echo_of({{"quad.nodes", str(p.smooth_nodes)}, {"margin", str(p.margin)}})));
    auto orr = orientation_cocycle();
    out.push_back(make_report("contraction_identity_or", identity(orr, or_q), 2e-2, p.seed,
                              echo_of({{"quad.nodes", str(p.or_nodes)}, {"margin", str(p.margin)}})));

    // Closed form of I(or): exact under the panel rule, order 1 under the trapezoid.
    auto pts2 = sample_configurations(p.seed, 2, p.samples, p.margin);
    auto i_panel = contraction_I(orr, QuadratureSpec{16, CircleRule::Panel, 4}, false);
    out.push_back(make_report(
        "contraction_or_closed_form_panel",
        residuals(pts2, [&](Angles z) { return std::abs(i_panel(z).real() - closed_form_I_or(z[0], z[1])); }), 1e-12,
        p.seed, echo_of({{"quad.rule", "panel"}, {"quad.nodes", "16"}})));
    out.push_back(check_contraction_quadrature(p.or_nodes, p.samples, p.seed, p.margin));

    // delta(delta f) = 0 on a few evaluator trees, without algebraic simplification.
    std::vector<BoundaryFunction> trees = {
        smooth_test_function(2), cup(smooth_test_function(2), smooth_test_function(2, 1)),
        contraction_I(smooth_test_function(4), smooth_q, false), k_extend(smooth_test_function(2), 1),
        cup(orr, smooth_test_function(2))};
    std::vector<double> dd;
    for (const auto& t : trees) {
        auto f = coboundary(coboundary(t, false), false);
        for (const auto& z : sample_configurations(p.seed, f.arity(), p.samples / 5 + 1, p.margin))
            dd.push_back(std::abs(f(z)));
    }
    out.push_back(make_report("coboundary_squared", dd, 1e-12, p.seed, {}));

    auto dor = coboundary(orr, false);
    auto pts4 = sample_configurations(p.seed, 4, p.samples, 1e-3);
    out.push_back(make_report("or_cocycle", residuals(pts4, [&](Angles z) { return std::abs(dor(z)); }), 0.0,
                              p.seed, echo_of({{"margin", "0.001"}})));

    // Differentiation under I: structural path against differences of a smooth-in-the-
    // arguments (panel) contraction and against the analytic derivative.
    FdSpec fd{1e-4, FdScheme::Central2, true};
    QuadratureSpec q512{512, CircleRule::Panel, 4};
    auto ior = contraction_I(orr, q512, false);
    std::vector<double> paths, analytic;
    for (const auto& z : pts2) {
        for (Flow x : {Flow::A, Flow::N}) {
            cplx structural = derivative_under_I(orr, x, q512, fd)(z);
            cplx differenced = flow_derivative_fd(ior, x, z, fd);
            paths.push_back(std::abs(structural - differenced));
            double exact = x == Flow::A ? (std::sin(z[0]) - std::sin(z[1])) / std::numbers::pi
                                        : (std::cos(z[1]) - std::cos(z[0])) / std::numbers::pi;
            analytic.push_back(std::abs(structural - exact));
        }
    }
    out.push_back(make_report("derivative_under_I_paths_or", paths, 2e-4, p.seed,
                              echo_of({{"quad.rule", "panel"}, {"quad.nodes", "512"}, {"fd.h", "1e-4"}})));
    out.push_back(make_report("derivative_under_I_analytic_or", analytic, 1e-10, p.seed, {}));
    return out;
}

VerificationReport check_contraction_quadrature(int nodes, int samples, std::uint64_t seed, double margin) {
    auto i_trap = contraction_I(orientation_cocycle(), QuadratureSpec{nodes, CircleRule::Trapezoid, 4}, false);
    auto pts = sample_configurations(seed, 2, samples, margin);
    return make_report(
        "contraction_or_closed_form_trapezoid",
        residuals(pts, [&](Angles z) { return std::abs(i_trap(z).real() - closed_form_I_or(z[0], z[1])); }),
        4.0 / nodes, seed, echo_of({{"quad.nodes", str(nodes)}, {"quad.rule", "trapezoid"}, {"margin", str(margin)}}));
}

VerificationReport check_ili_or(int nodes, const FdSpec& fd, int samples, std::uint64_t seed, double budget,
                                std::vector<std::array<double, 4>>* rows) {
    QuadratureSpec q{nodes, CircleRule::Trapezoid, 4};
    auto ili = contraction_I(cauchy_L(contraction_I(orientation_cocycle(), q), fd), q);
    Xorshift64Star rng(seed);
    Points pts;
    for (int i = 0; i < samples; ++i) pts.push_back({rng.uniform(0.0, kTwoPi)});
    std::vector<cplx> vals(pts.size());
    parallel_for(static_cast<long>(pts.size()), [&](long i) { vals[i] = ili(pts[i]); });
    std::vector<double> r(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        r[i] = std::abs(vals[i] - cplx(0.0, 1.0 / std::numbers::pi) * std::polar(1.0, pts[i][0]));
        if (rows) rows->push_back({pts[i][0], vals[i].real(), vals[i].imag(), r[i]});
    }
    return make_report("ili_or_closed_form", r, budget, seed,
                       echo_of({{"quad.nodes", str(nodes)}, {"quad.rule", "trapezoid"}, {"fd.h", str(fd.h)}}));
}

std::vector<VerificationReport> check_commutators(const CommutatorCheckParams& p) {
    std::vector<double> ka, kn, an, cx;
    // h is the outer step; the inner derivative uses h / 10.
    const FdSpec outer = p.fd;
    FdSpec fd = p.fd;
    fd.h = p.fd.h / 10.0;
    for (int variant = 0; variant < 2; ++variant) {
        auto f = smooth_test_function(3, variant);
        auto dk = flow_derivative_fn(f, Flow::K, fd), da = flow_derivative_fn(f, Flow::A, fd),
             dn = flow_derivative_fn(f, Flow::N, fd);
        auto l = cauchy_L(f, fd), lb = cauchy_Lbar(f, fd);
        auto pts = sample_configurations(p.seed + variant, 3, p.samples / 2, p.margin);
        auto d = [&](const BoundaryFunction& g, Flow x, Angles z) { return flow_derivative(g, x, z, outer); };
        for (const auto& zv : pts) {
            Angles z(zv);
            ka.push_back(std::abs(d(da, Flow::K, z) - d(dk, Flow::A, z) - (dk(z) - dn(z))));
            kn.push_back(std::abs(d(dn, Flow::K, z) - d(dk, Flow::N, z) - da(z)));
            an.push_back(std::abs(d(dn, Flow::A, z) - d(da, Flow::N, z) - dn(z)));
            // [L, Lbar] f + L f - Lbar f with L = L_A + i L_N applied to complex functions.
            auto apply_l = [&](const BoundaryFunction& g, double sign) {
                return d(g, Flow::A, z) + cplx(0.0, sign) * d(g, Flow::N, z);
            };
            cx.push_back(std::abs(apply_l(lb, 1.0) - apply_l(l, -1.0) + l(z) - lb(z)));
        }
    }
    ConfigEcho echo = echo_of({{"fd.h", str(outer.h)}, {"fd.inner_h", str(fd.h)}, {"fd.scheme", scheme_name(fd.scheme)}});
    // Empirical error constant C in residual ~ C h^order, reported per run.
    const int order = fd.scheme == FdScheme::Central4 ? 4 : 2;
    std::vector<VerificationReport> out;
    for (auto [name, r] : {std::pair{"commutator_K_A", &ka}, {"commutator_K_N", &kn}, {"commutator_A_N", &an},
                           {"complex_commutator", &cx}}) {
        out.push_back(make_report(name, *r, p.budget, p.seed, echo));
        out.back().note = "C = sup / h_outer^" + std::to_string(order) + " = " +
                          format_double(out.back().sup_residual / std::pow(outer.h, order));
    }
    return out;
}

std::vector<VerificationReport> check_cup(const CupCheckParams& p) {
    std::vector<VerificationReport> out;
    FdSpec fd;
    QuadratureSpec q{256, CircleRule::Trapezoid, 4};
    auto f = smooth_test_function(2), g = smooth_test_function(3, 1), h = smooth_test_function(2, 2);
    auto fg = cup(f, g);
    auto pts4 = sample_configurations(p.seed, 4, p.samples, p.margin);

    auto leibniz = cauchy_L(fg, fd) - (cup(cauchy_L(f, fd), g) + cup(f, cauchy_L(g, fd)));
    out.push_back(make_report("cup_leibniz", residuals(pts4, [&](Angles z) { return std::abs(leibniz(z)); }), 1e-6,
                              p.seed, echo_of({{"fd.h", "1e-4"}})));

    auto ifg = contraction_I(fg, q, false) - cup(contraction_I(f, q, false), g);
    auto pts3 = sample_configurations(p.seed, 3, p.samples, p.margin);
    out.push_back(make_report("cup_contraction", residuals(pts3, [&](Angles z) { return std::abs(ifg(z)); }), 1e-10,
                              p.seed, echo_of({{"quad.nodes", "256"}})));

    auto kfg = k_reduce(fg) - cup(k_reduce(f), g);
    out.push_back(make_report("cup_k_reduction", residuals(pts3, [&](Angles z) { return std::abs(kfg(z)); }),
                              1e-12, p.seed, {}));

    auto assoc = cup(cup(f, g), h) - cup(f, cup(g, h));
    auto pts5 = sample_configurations(p.seed, 5, p.samples, p.margin);
    out.push_back(make_report("cup_associativity", residuals(pts5, [&](Angles z) { return std::abs(assoc(z)); }),
                              1e-12, p.seed, {}));

    auto orr = orientation_cocycle();
    Xorshift64Star rng(p.seed);
    std::vector<double> alt, inv;
    for (int i = 0; i < p.samples; ++i) {
        auto z = random_configuration(rng, 3, 1e-3);
        double v = orr(z).real();
        alt.push_back(std::abs(orr({z[1], z[0], z[2]}).real() + v) + std::abs(orr({z[0], z[2], z[1]}).real() + v));
        inv.push_back(std::abs(orr(act_all(random_element(rng), z)).real() - v));
    }
    out.push_back(make_report("or_alternating", alt, 0.0, p.seed, {}));
    out.push_back(make_report("or_g_invariant", inv, 0.0, p.seed, echo_of({{"margin", "0.001"}})));

    std::vector<double> eq, rt1, rt2;
    auto F = from_callable(3, Codomain::weighted(1), [](Angles z) {
        return std::polar(1.0, z[0]) * std::cos(z[1] - z[2]) + std::polar(1.0, z[1]) * std::sin(z[0] - z[2]);
    });
    for (int mu : {-1, 0, 2}) {
        auto ext = k_extend(g, mu);
        auto back = k_reduce(ext);
        for (int i = 0; i < p.samples / 3 + 1; ++i) {
            auto z = random_configuration(rng, 4, p.margin);
            eq.push_back(equivariance_defect(ext, mu, z, rng.uniform(0.0, kTwoPi)));
            std::vector<double> z3(z.begin(), z.end() - 1);
            rt1.push_back(std::abs(back(z3) - g(z3)));
        }
    }
    auto Fr = k_extend(k_reduce(F), 1);
    for (const auto& z : pts3) rt2.push_back(std::abs(Fr(z) - F(z)));
    out.push_back(make_report("k_extend_equivariance", eq, 1e-10, p.seed, {}));
    out.push_back(make_report("k_reduce_of_k_extend", rt1, 1e-12, p.seed, {}));
    out.push_back(make_report("k_extend_of_k_reduce", rt2, 1e-12, p.seed, {}));
    return out;
}

VerificationReport check_tameness(const BoundaryFunction& psi, const TailSpec& tail, const LineIntegralSpec& line,
                                  int pairs, std::uint64_t seed, const char* name) {
    auto s = solve_frobenius_S(psi, tail);
    // sup of psi_K on a fine grid (arity 2) or by sampling.
    auto psik = k_reduce(psi);
    double sup = 0.0;
    if (psik.arity() == 1) {
        for (int i = 1; i < 20000; ++i) sup = std::max(sup, std::abs(psik({kTwoPi * i / 20000.0})));
    } else {
        for (const auto& z : sample_configurations(seed ^ 0xABCDEF, psik.arity(), 20000, 0.0))
            sup = std::max(sup, std::abs(psik(z)));
    }
    const double bound = std::numbers::pi * sup;
    Xorshift64Star rng(seed);
    Points pts;
    std::vector<double> times;
    for (int i = 0; i < pairs; ++i) {
        pts.push_back(random_configuration(rng, psi.arity(), 0.1));
        times.push_back(rng.uniform(-20.0, 20.0));
    }
    std::vector<double> excess(pts.size()), ratio(pts.size());
    parallel_for(static_cast<long>(pts.size()), [&](long i) {
        double v = std::abs(flow_line_integral(s, pts[i], times[i], line));
        excess[i] = std::max(0.0, v - bound);
        ratio[i] = bound > 0 ? v / bound : 0.0;
    });
    auto r = make_report(name, excess, 1e-3, seed, echo_of({{"bound", str(bound)}, {"pairs", str(pairs)}}));
    r.note = "max |int Re(S psi)| / (pi sup|psi_K|) = " + format_double(*std::max_element(ratio.begin(), ratio.end()));
    return r;
}

std::vector<VerificationReport> check_solvers(const SolverCheckParams& p) {
    std::vector<VerificationReport> out;
    const FdSpec& fd = p.fd;
    ConfigEcho echo = echo_of({{"fd.h", str(fd.h)}, {"tail.t_max", str(p.tail.t_max)}, {"tail.nodes", str(p.tail.nodes)},
                               {"margin", str(p.margin)}});

    // Right inverse of Q on smooth weight-0 psi.
    std::vector<double> qs;
    for (int arity : {2, 3}) {
        auto psi = smooth_k_invariant(arity);
        auto qsp = frobenius_Q(solve_frobenius_S(psi, p.tail), fd);
        auto pts = sample_configurations(p.seed, arity, p.samples, p.margin);
        for (double r : residuals(pts, [&](Angles z) { return std::abs(qsp(z).real() - psi(z).real()); }))
            qs.push_back(r);
    }
    out.push_back(make_report("frobenius_S_right_inverse_smooth", qs, 1e-5, p.seed, echo));

    // or-derived psi = I(or)/pi.
    auto psi_or = or_derived_psi();
    auto qs_or = frobenius_Q(solve_frobenius_S(psi_or, p.tail), fd);
    auto pts2 = sample_configurations(p.seed, 2, p.samples, p.margin);
    out.push_back(make_report("frobenius_S_right_inverse_or",
                              residuals(pts2, [&](Angles z) { return std::abs(qs_or(z).real() - psi_or(z).real()); }),
                              1e-3, p.seed, echo));

    auto one = solve_frobenius_S(constant(1, 1.0), p.tail);
    Points angles;
    Xorshift64Star rng(p.seed);
    for (int i = 0; i < p.samples; ++i) angles.push_back({rng.uniform(0.0, kTwoPi)});
    out.push_back(make_report("frobenius_S_constant",
                              residuals(angles, [&](Angles z) {
                                  return std::abs(one(z) - cplx(0.0, 1.0) * std::polar(1.0, z[0]));
                              }),
                              1e-12, p.seed, {}));
    auto sred = k_reduce(solve_frobenius_S(smooth_k_invariant(3), p.tail));
    out.push_back(make_report("frobenius_S_reduction_imaginary",
                              residuals(pts2, [&](Angles z) { return std::abs(sred(z).real()); }), 0.0, p.seed, {}));

    // Cauchy problem on u = L f with f smooth and K-invariant. Integrating L_A f along
    // a_t k.b gives the oracle R(L f)(z) = f(z) - f(b(z)).
    FdSpec fd4{fd.h, FdScheme::Central4, true};
    auto f = smooth_k_invariant(3);
    auto u = cauchy_L(f, fd4);
    auto ru = solve_cauchy_R(u, p.scheme, p.line);
    auto pts3 = sample_configurations(p.seed, 3, p.samples, p.margin);
    auto lru = cauchy_L(ru, fd);
    out.push_back(make_report("cauchy_R_right_inverse",
                              residuals(pts3, [&](Angles z) { return std::abs(lru(z) - u(z)); }), 1e-4, p.seed, echo));
    out.push_back(make_report("cauchy_R_oracle",
                              residuals(pts3,
                                        [&](Angles z) {
                                            auto bp = canonical_basepoint(z, p.scheme);
                                            return std::abs(ru(z).real() - (f(z).real() - f(bp.b).real()));
                                        }),
                              1e-8, p.seed, {}));
    out.push_back(make_report("cauchy_R_vanishes_at_basepoints",
                              residuals(pts3,
                                        [&](Angles z) {
                                            auto bp = canonical_basepoint(z, p.scheme);
                                            return std::abs(ru(bp.b));
                                        }),
                              0.0, p.seed, {}));
    out.push_back(make_report("cauchy_R_k_invariance",
                              residuals(pts3,
                                        [&](Angles z) {
                                            std::vector<double> zt(z.begin(), z.end());
                                            for (auto& x : zt) x = reduce_angle(x + 1.234);
                                            return std::abs(ru(zt) - ru(z));
                                        }),
                              1e-6, p.seed, {}));
    std::vector<double> variants;
    for (CartanVariant v : {CartanVariant::SignFlipped, CartanVariant::NegativeT}) {
        CauchyOptions o;
        o.variant = v;
        auto rv = solve_cauchy_R(u, p.scheme, p.line, o);
        for (double r : residuals(pts3, [&](Angles z) { return std::abs(rv(z) - ru(z)); })) variants.push_back(r);
    }
    out.push_back(make_report("cauchy_R_cartan_choice", variants, 1e-8, p.seed, {}));

    std::vector<double> orbit, recon;
    Xorshift64Star grng(p.seed + 17);
    for (const auto& z : sample_configurations(p.seed, 5, p.samples, p.margin)) {
        auto bp = canonical_basepoint(z, p.scheme);
        auto moved = act_all(random_element(grng), z);
        auto bq = canonical_basepoint(moved, p.scheme);
        double e = 0.0, r = 0.0;
        for (std::size_t j = 0; j < z.size(); ++j) {
            e = std::max(e, circle_distance(bp.b[j], bq.b[j]));
            r = std::max(r, circle_distance(act_angle(bp.g, bp.b[j]), z[j]));
        }
        orbit.push_back(e);
        recon.push_back(r);
    }
    out.push_back(make_report("basepoint_orbit_invariance", orbit, 1e-8, p.seed, {}));
    out.push_back(make_report("basepoint_reconstruction", recon, 1e-8, p.seed, {}));

    if (p.tame_pairs <= 0) return out;
    out.push_back(check_tameness(smooth_k_invariant(2), p.tail, p.line, p.tame_pairs, p.seed, "tameness_smooth"));
    out.push_back(check_tameness(psi_or, p.tail, p.line, p.tame_pairs, p.seed, "tameness_or"));
    return out;
}

std::vector<VerificationReport> check_staircase(const StaircaseCheckParams& p) {
    std::vector<VerificationReport> out;
    auto orr = orientation_cocycle();
    auto c = cup(orr, orr);
    auto st = staircase_stages(c, p.cfg);
    ConfigEcho echo = p.cfg.echo();
    echo.emplace_back("margin", str(p.margin));

    VerifyOptions vo;
    vo.fd = p.cfg.fd;
    auto rep = verify_primitive(c, st.p, p.samples, p.seed, p.margin, vo);
    rep.identity_name = "primitive_or_cup_or";
    rep.config_echo = echo;
    out.push_back(rep);

    const int m = p.intermediate_samples;
    auto pts4 = sample_configurations(p.seed, 4, m, p.margin);
    auto du = coboundary(st.u, false);
    out.push_back(make_report("staircase_delta_u_equals_LIc",
                              residuals(pts4, [&](Angles z) { return std::abs(du(z) - st.lic(z)); }), 1e-6, p.seed, echo));
    auto qu = frobenius_Q(st.u, p.cfg.fd);
    auto pts3 = sample_configurations(p.seed, 3, m, p.margin);
    out.push_back(make_report("staircase_Q_u_vanishes", residuals(pts3, [&](Angles z) { return std::abs(qu(z)); }), 1e-4,
                              p.seed, echo));
    auto red = k_reduce(st.ilic);
    auto redc = k_reduce(orr);
    auto pts2 = sample_configurations(p.seed, 2, m, p.margin);
    out.push_back(make_report("staircase_reducible_witness",
                              residuals(pts2,
                                        [&](Angles z) {
                                            return std::abs(red(z) * std::numbers::pi / cplx(0.0, 1.0) - redc(z));
                                        }),
                              1e-8, p.seed, echo));

    auto pz = staircase_stages(zero_function(5), p.cfg).p;
    out.push_back(make_report("staircase_zero_cocycle",
                              residuals(pts4, [&](Angles z) { return std::abs(pz(z)); }), 1e-10, p.seed, {}));

    // Linearity against a second invariant cocycle delta q.
    auto c2 = coboundary(invariant_quadruple(), false);
    auto p2 = staircase_stages(c2, p.cfg).p;
    auto p12 = staircase_stages(c + 0.5 * c2, p.cfg).p;
    auto lin = residuals(pts4, [&](Angles z) { return std::abs(p12(z) - st.p(z) - 0.5 * p2(z)); });
    out.push_back(make_report("staircase_linearity", lin, 1e-6, p.seed, echo));
    return out;
}

}  // namespace staircase
