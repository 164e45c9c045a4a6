#include "staircase/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "staircase/error.hpp"
#include "staircase/rng.hpp"

namespace staircase {

void StaircaseConfig::validate() const {
    quad.validate();
    fd.validate();
    tail.validate();
    line.validate();
    scheme.validate();
    table.validate();
}

ConfigEcho StaircaseConfig::echo() const {
    return {
        {"quad.nodes", std::to_string(quad.circle_nodes)},
        {"quad.rule", rule_name(quad.rule)},
        {"quad.min_arc_nodes", std::to_string(quad.min_arc_nodes)},
        {"fd.h", format_double(fd.h)},
        {"fd.scheme", scheme_name(fd.scheme)},
        {"tail.t_max", format_double(tail.t_max)},
        {"tail.nodes", std::to_string(tail.nodes)},
        {"line.nodes_per_unit", format_double(line.nodes_per_unit)},
        {"line.min_nodes", std::to_string(line.min_nodes)},
        {"scheme.margin", format_double(scheme.margin)},
        {"tabulate", tabulate ? "true" : "false"},
        {"table.tol", format_double(table.tol)},
        {"table.degree", std::to_string(table.degree)},
    };
}

StaircaseStages staircase_stages(const BoundaryFunction& c, const StaircaseConfig& cfg) {
    cfg.validate();
    const int n = c.arity() - 1;
    if (n <= 2) throw Error(ErrorCode::DegreeTooSmall, "the staircase needs a cocycle of degree n > 2");
    if (!c.is_real()) throw Error(ErrorCode::ArityError, "the staircase needs a real cocycle");
    StaircaseStages s{c, c, c, c, c, c, c, c, c, {}, {}, false};
    s.ic = contraction_I(c, cfg.quad);
    s.lic = cauchy_L(s.ic, cfg.fd);
    s.ilic = contraction_I(s.lic, cfg.quad);
    s.q_ilic = frobenius_Q(s.ilic, cfg.fd);
    s.psi = contraction_I(s.q_ilic, cfg.quad);
    s.tabulated = cfg.tabulate && s.psi.arity() == 2;
    if (s.tabulated) s.psi = tabulate_k_reduced(s.psi, cfg.table, &s.psi_table);
    s.s_psi = solve_frobenius_S(s.psi, cfg.tail);
    if (s.tabulated) s.s_psi = tabulate_k_reduced(s.s_psi, cfg.table, &s.s_table);
    s.u = s.ilic - coboundary(s.s_psi);
    s.ru = memoize(solve_cauchy_R(s.u, cfg.scheme, cfg.line));
    s.p = s.ic - coboundary(s.ru);
    return s;
}

BoundaryFunction primitive_P(const BoundaryFunction& c, const StaircaseConfig& cfg) {
    if (c.arity() - 1 <= 2) throw Error(ErrorCode::DegreeTooSmall, "the staircase needs degree n > 2");
    // Spot checks of the cocycle and invariance preconditions.
    Xorshift64Star rng(0x5EED);
    auto dc = coboundary(c, false);
    for (int i = 0; i < 8; ++i) {
        auto z = random_configuration(rng, c.arity() + 1, 0.1);
        if (std::abs(dc(z)) > 1e-5) throw Error(ErrorCode::PreconditionViolated, "input is not a cocycle");
        std::vector<double> zc(z.begin(), z.end() - 1);
        GroupElement g = compose(one_param(Flow::K, rng.uniform(0.0, kTwoPi)),
                                 compose(one_param(Flow::A, rng.uniform(-1.0, 1.0)),
                                         one_param(Flow::N, rng.uniform(-1.0, 1.0))));
        std::vector<double> gz(zc.size());
        for (std::size_t j = 0; j < zc.size(); ++j) gz[j] = act_angle(g, zc[j]);
        if (std::abs(c(gz) - c(zc)) > 1e-5) throw Error(ErrorCode::PreconditionViolated, "input is not G-invariant");
    }
    return staircase_stages(c, cfg).p;
}

VerificationReport verify_primitive(const BoundaryFunction& c, const BoundaryFunction& p, int samples,
                                    std::uint64_t seed, double margin, const VerifyOptions& opts,
                                    std::vector<PrimitiveSample>* rows) {
    if (p.arity() + 1 != c.arity()) throw Error(ErrorCode::ArityMismatch, "arity(p) + 1 must equal arity(c)");
    auto points = sample_configurations(seed, c.arity(), samples, margin);
    auto dp = coboundary(p, !opts.expand_coboundary);
    std::vector<PrimitiveSample> out(points.size());
    parallel_for(
        static_cast<long>(points.size()),
        [&](long i) {
            const auto& z = points[i];
            PrimitiveSample& r = out[i];
            r.angles = z;
            r.residual = std::abs(dp(z) - c(z));
            Angles zp(z.data(), z.size() - 1);
            r.p_value = opts.record_values ? p(zp).real() : std::numeric_limits<double>::quiet_NaN();
            if (opts.check_invariance) {
                cplx la = flow_derivative(p, Flow::A, zp, opts.fd);
                cplx ln = flow_derivative(p, Flow::N, zp, opts.fd);
                r.invariance = std::abs(la + cplx(0.0, 1.0) * ln);
            }
        },
        opts.execution);
    std::vector<double> res, inv;
    for (const auto& r : out) {
        res.push_back(r.residual);
        inv.push_back(r.invariance);
    }
    VerificationReport rep = make_report("delta_p_equals_c", res, opts.budget, seed, {});
    if (opts.check_invariance) {
        VerificationReport li = make_report("L_p_vanishes", inv, opts.invariance_budget, seed, {});
        rep.sup_invariance = li.sup_residual;
        rep.mean_invariance = li.mean_residual;
        rep.invariance_budget = opts.invariance_budget;
        rep.passed = rep.passed && li.passed;
    }
    if (rows) *rows = std::move(out);
    return rep;
}

std::vector<double> sample_abs(const BoundaryFunction& f, int samples, std::uint64_t seed, double margin,
                               Execution execution) {
    if (samples < 1) throw Error(ErrorCode::ConfigError, "samples must be at least 1");
    auto points = sample_configurations(seed, f.arity(), samples, margin);
    std::vector<double> v(points.size());
    parallel_for(
        static_cast<long>(points.size()), [&](long i) { v[i] = std::abs(f(points[i])); }, execution);
    return v;
}

double estimate_sup(const BoundaryFunction& f, int samples, std::uint64_t seed, double margin,
                    Execution execution) {
    auto v = sample_abs(f, samples, seed, margin, execution);
    return *std::max_element(v.begin(), v.end());
}

}  // namespace staircase
