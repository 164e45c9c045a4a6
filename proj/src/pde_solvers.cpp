#include "staircase/pde_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "staircase/cochain_ops.hpp"
#include "staircase/error.hpp"
#include "staircase/quadrature.hpp"

namespace staircase {

void TailSpec::validate() const {
    if (!(t_max > 0.0) || nodes < 1 || per_panel < 1 || per_panel > 512)
        throw Error(ErrorCode::ConfigError, "invalid tail spec");
    if (10.0 * std::exp(-t_max) > 1e-15)
        throw Error(ErrorCode::ConfigError, "tail.t_max too small for the 1e-15 truncation bound");
}

double TailSpec::psi_bound() const { return 1e-15 * std::exp(t_max); }

void BasepointScheme::validate() const {
    if (!(margin > 0.0)) throw Error(ErrorCode::ConfigError, "basepoint margin must be positive");
    if (orientation(reference_pos[0], reference_pos[1], reference_pos[2]) != 1 ||
        orientation(reference_neg[0], reference_neg[1], reference_neg[2]) != -1)
        throw Error(ErrorCode::ConfigError, "reference triples have the wrong orientation");
}

void LineIntegralSpec::validate() const {
    if (!(nodes_per_unit > 0.0) || min_nodes < 1 || per_panel < 1 || per_panel > 512)
        throw Error(ErrorCode::ConfigError, "invalid line integral spec");
}

int LineIntegralSpec::node_count(double T) const {
    return std::max(min_nodes, static_cast<int>(std::ceil(std::abs(T) * nodes_per_unit)));
}

Basepoint canonical_basepoint(Angles z, const BasepointScheme& scheme) {
    if (z.size() < 3) throw Error(ErrorCode::ArityError, "basepoints need at least three angles");
    Triple lead{z[0], z[1], z[2]};
    int o = orientation(lead[0], lead[1], lead[2]);
    if (o == 0 || min_separation(lead) < scheme.margin)
        throw Error(ErrorCode::DegenerateLeadingTriple, "leading triple within margin");
    const Triple& ref = o > 0 ? scheme.reference_pos : scheme.reference_neg;
    GroupElement h = map_triple(lead, ref);
    Basepoint bp;
    bp.b.resize(z.size());
    for (int j = 0; j < 3; ++j) bp.b[j] = reduce_angle(ref[j]);
    for (std::size_t j = 3; j < z.size(); ++j) bp.b[j] = act_angle(h, z[j]);
    bp.g = inverse(h);
    return bp;
}

namespace {

class FrobeniusSNode final : public Node {
public:
    FrobeniusSNode(BoundaryFunction psi, TailSpec tail) : psi_(std::move(psi)), tail_(tail) {
        for_each_interval_node(0.0, tail.t_max, tail.nodes, tail.per_panel, [&](double t, double w) {
            times_.push_back(t);
            weights_.push_back(w * std::exp(-t));
        });
        bound_ = tail.psi_bound();
    }

    cplx eval(Angles z) const override {
        const std::size_t m = z.size();
        double shifted[kMaxArity];
        double buf[kMaxArity];
        for (std::size_t j = 1; j < m; ++j) shifted[j] = reduce_angle(z[j] - z[0]);
        buf[0] = 0.0;
        const Angles arg(buf, m);
        double s = 0.0;
        for (std::size_t k = 0; k < times_.size(); ++k) {
            for (std::size_t j = 1; j < m; ++j) buf[j] = flow_angle(Flow::A, times_[k], shifted[j]);
            double v = psi_(arg).real();
            if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteSample, "non-finite psi in S");
            if (std::abs(v) > bound_) throw Error(ErrorCode::TailBudgetExceeded, "psi exceeds the tail bound");
            s += weights_[k] * v;
        }
        return cplx(0.0, 1.0) * std::polar(1.0, z[0]) * s;
    }

private:
    BoundaryFunction psi_;
    TailSpec tail_;
    std::vector<double> times_;
    std::vector<double> weights_;
    double bound_ = 0.0;
};

double line_integral(const BoundaryFunction& u, const std::vector<double>& start, double T,
                     const LineIntegralSpec& line) {
    if (T == 0.0) return 0.0;
    const std::size_t m = start.size();
    double buf[kMaxArity];
    const Angles arg(buf, m);
    double s = 0.0;
    double lo = std::min(0.0, T), hi = std::max(0.0, T);
    for_each_interval_node(lo, hi, line.node_count(T), line.per_panel, [&](double t, double w) {
        for (std::size_t j = 0; j < m; ++j) buf[j] = flow_angle(Flow::A, t, start[j]);
        double v = u(arg).real();
        if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteSample, "non-finite integrand in R");
        s += w * v;
    });
    return T > 0.0 ? s : -s;
}

class CauchyRNode final : public Node {
public:
    CauchyRNode(BoundaryFunction u, BasepointScheme scheme, LineIntegralSpec line, CauchyOptions opts)
        : u_(std::move(u)), scheme_(scheme), line_(line), opts_(opts), q_(frobenius_Q(u_, opts.fd)) {}

    cplx eval(Angles z) const override {
        int o = orientation(z[0], z[1], z[2]);
        double lead[3] = {z[0], z[1], z[2]};
        if (o == 0 || min_separation(Angles(lead, 3)) < scheme_.margin) return 0.0;
        if (opts_.strict) {
            double q = std::abs(q_(z));
            if (q > opts_.strict_tol)
                throw Error(ErrorCode::IntegrabilityViolation, "Q u = " + std::to_string(q) + " at sample");
        }
        Basepoint bp = canonical_basepoint(z, scheme_);
        GroupElement g = bp.g;
        if (opts_.variant == CartanVariant::SignFlipped) g = {-g.a, -g.b};
        CartanCoords c = cartan(g);
        if (c.T < 1e-14) return 0.0;
        double T = c.T, turn = c.tK_right;
        if (opts_.variant == CartanVariant::NegativeT) {
            T = -T;
            turn += std::numbers::pi;
        }
        std::vector<double> start(bp.b.size());
        for (std::size_t j = 0; j < start.size(); ++j) start[j] = reduce_angle(bp.b[j] + turn);
        return line_integral(u_, start, T, line_);
    }

private:
    BoundaryFunction u_;
    BasepointScheme scheme_;
    LineIntegralSpec line_;
    CauchyOptions opts_;
    BoundaryFunction q_;
};

}  // namespace

BoundaryFunction solve_frobenius_S(const BoundaryFunction& psi, const TailSpec& tail) {
    tail.validate();
    if (psi.arity() < 1) throw Error(ErrorCode::ArityError, "S needs arity >= 1");
    Codomain cd = Codomain::weighted(1);
    Traits t;
    t.singular_margin = psi.singular_margin();
    if (psi.is_zero()) return zero_function(psi.arity(), cd);
    return BoundaryFunction(psi.arity(), cd, std::make_shared<FrobeniusSNode>(psi, tail), t);
}

BoundaryFunction solve_cauchy_R(const BoundaryFunction& u, const BasepointScheme& scheme,
                                const LineIntegralSpec& line, const CauchyOptions& opts) {
    scheme.validate();
    line.validate();
    if (u.arity() < 3) throw Error(ErrorCode::ArityError, "R needs arity >= 3");
    Codomain cd = Codomain::real(0);
    Traits t;
    t.singular_margin = u.singular_margin();
    if (u.is_zero()) return zero_function(u.arity(), cd);
    return BoundaryFunction(u.arity(), cd, std::make_shared<CauchyRNode>(u, scheme, line, opts), t);
}

double flow_line_integral(const BoundaryFunction& v, Angles z, double T, const LineIntegralSpec& line) {
    std::vector<double> start(z.begin(), z.end());
    return line_integral(v, start, T, line);
}

}  // namespace staircase
