#include "staircase/cochain_ops.hpp"

#include <cmath>

#include "staircase/error.hpp"

namespace staircase {

namespace {

void check_finite(cplx v, const char* where) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw Error(ErrorCode::NonFiniteSample, std::string("non-finite value in ") + where);
}

class CoboundaryNode final : public Node {
public:
    explicit CoboundaryNode(BoundaryFunction f) : f_(std::move(f)) {}

    cplx eval(Angles z) const override {
        double buf[kMaxArity];
        cplx s = 0.0;
        const std::size_t n = z.size();
        for (std::size_t j = 0; j < n; ++j) {
            face(z, j, buf);
            cplx v = f_(Angles(buf, n - 1));
            s += (j % 2 == 0) ? v : -v;
        }
        return s;
    }

    std::optional<cplx> structural_derivative(Flow x, Angles z, const FdSpec& fd) const override {
        double buf[kMaxArity];
        cplx s = 0.0;
        const std::size_t n = z.size();
        for (std::size_t j = 0; j < n; ++j) {
            face(z, j, buf);
            cplx v = flow_derivative(f_, x, Angles(buf, n - 1), fd);
            s += (j % 2 == 0) ? v : -v;
        }
        return s;
    }

private:
    static void face(Angles z, std::size_t skip, double* out) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < z.size(); ++i)
            if (i != skip) out[k++] = z[i];
    }

    BoundaryFunction f_;
};

cplx contraction_value(const BoundaryFunction& f, const QuadratureSpec& q, Angles z) {
    double buf[kMaxArity];
    for (std::size_t i = 0; i < z.size(); ++i) buf[i + 1] = z[i];
    const Angles arg(buf, z.size() + 1);
    cplx s = 0.0;
    for_each_circle_node(q, z, [&](double eta, double w) {
        buf[0] = eta;
        s += w * f(arg);
    });
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw Error(ErrorCode::QuadratureOverflow, "non-finite integrand in contraction");
    return s;
}

cplx contraction_derivative(const BoundaryFunction& f, const QuadratureSpec& q, Flow x, Angles z,
                            const FdSpec& fd) {
    double buf[kMaxArity];
    for (std::size_t i = 0; i < z.size(); ++i) buf[i + 1] = z[i];
    const Angles arg(buf, z.size() + 1);
    cplx s = 0.0;
    for_each_circle_node(q, z, [&](double eta, double w) {
        buf[0] = eta;
        cplx d = flow_derivative(f, x, arg, fd);
        if (x == Flow::A) d += std::cos(eta) * f(arg);
        else if (x == Flow::N) d += std::sin(eta) * f(arg);
        s += w * d;
    });
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw Error(ErrorCode::QuadratureOverflow, "non-finite integrand in contraction derivative");
    return s;
}

class ContractionNode final : public Node {
public:
    ContractionNode(BoundaryFunction f, QuadratureSpec q) : f_(std::move(f)), q_(q) {}
    cplx eval(Angles z) const override { return contraction_value(f_, q_, z); }
    std::optional<cplx> structural_derivative(Flow x, Angles z, const FdSpec& fd) const override {
        return contraction_derivative(f_, q_, x, z, fd);
    }

private:
    BoundaryFunction f_;
    QuadratureSpec q_;
};

class FlowNode final : public Node {
public:
    FlowNode(BoundaryFunction f, Flow x, FdSpec fd) : f_(std::move(f)), x_(x), fd_(fd) {}
    cplx eval(Angles z) const override { return flow_derivative(f_, x_, z, fd_); }

private:
    BoundaryFunction f_;
    Flow x_;
    FdSpec fd_;
};

class CauchyNode final : public Node {
public:
    CauchyNode(BoundaryFunction f, FdSpec fd, double sign) : f_(std::move(f)), fd_(fd), sign_(sign) {}
    cplx eval(Angles z) const override {
        cplx da = flow_derivative(f_, Flow::A, z, fd_);
        cplx dn = flow_derivative(f_, Flow::N, z, fd_);
        return da + cplx(0.0, sign_) * dn;
    }

private:
    BoundaryFunction f_;
    FdSpec fd_;
    double sign_;
};

class FrobeniusNode final : public Node {
public:
    FrobeniusNode(BoundaryFunction u, FdSpec fd) : u_(std::move(u)), fd_(fd) {}
    cplx eval(Angles z) const override {
        cplx v = u_(z);
        cplx da = flow_derivative(u_, Flow::A, z, fd_);
        cplx dn = flow_derivative(u_, Flow::N, z, fd_);
        return v.imag() - da.imag() + dn.real();
    }

private:
    BoundaryFunction u_;
    FdSpec fd_;
};

class DerivativeUnderINode final : public Node {
public:
    DerivativeUnderINode(BoundaryFunction f, Flow x, QuadratureSpec q, FdSpec fd)
        : f_(std::move(f)), x_(x), q_(q), fd_(fd) {}
    cplx eval(Angles z) const override { return contraction_derivative(f_, q_, x_, z, fd_); }

private:
    BoundaryFunction f_;
    Flow x_;
    QuadratureSpec q_;
    FdSpec fd_;
};

Traits derived_traits(const BoundaryFunction& f) {
    Traits t;
    t.singular_margin = f.singular_margin();
    return t;
}

}  // namespace

BoundaryFunction coboundary(const BoundaryFunction& f, bool simplify) {
    if (f.arity() < 1) throw Error(ErrorCode::ArityError, "coboundary needs arity >= 1");
    if (f.arity() + 1 > kMaxArity) throw Error(ErrorCode::ArityError, "coboundary arity too large");
    if (f.is_zero()) return zero_function(f.arity() + 1, f.codomain());
    if (simplify) {
        if (dynamic_cast<const CoboundaryNode*>(&f.node()))
            return zero_function(f.arity() + 1, f.codomain());
        auto terms = linear_terms(f);
        if (terms.size() > 1) {
            for (auto& t : terms) t.second = coboundary(t.second, true);
            return linear_combination(terms);
        }
    }
    Traits t = f.traits();
    return BoundaryFunction(f.arity() + 1, f.codomain(), std::make_shared<CoboundaryNode>(f), t);
}

BoundaryFunction contraction_I(const BoundaryFunction& f, const QuadratureSpec& quad, bool memo) {
    quad.validate();
    if (f.arity() < 2) throw Error(ErrorCode::ArityError, "contraction needs arity >= 2");
    // I commutes with rotations but not with the rest of G.
    Traits t = f.traits();
    t.g_invariant = false;
    if (f.is_zero()) return zero_function(f.arity() - 1, f.codomain());
    BoundaryFunction out(f.arity() - 1, f.codomain(), std::make_shared<ContractionNode>(f, quad), t);
    return memo ? memoize(out) : out;
}

void move_along(Flow field, double t, Angles z, double* out) {
    if (field == Flow::N) {
        GroupElement g = one_param(field, t);
        for (std::size_t i = 0; i < z.size(); ++i) out[i] = act_angle(g, z[i]);
        return;
    }
    for (std::size_t i = 0; i < z.size(); ++i) out[i] = flow_angle(field, t, z[i]);
}

cplx flow_derivative_fd(const BoundaryFunction& f, Flow field, Angles z, const FdSpec& fd) {
    double buf[kMaxArity];
    const Angles moved(buf, z.size());
    auto at = [&](double t) {
        move_along(field, t, z, buf);
        return f(moved);
    };
    const double h = fd.h;
    cplx d;
    if (fd.scheme == FdScheme::Central2) {
        d = (at(h) - at(-h)) / (2.0 * h);
    } else {
        d = (-at(2.0 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2.0 * h)) / (12.0 * h);
    }
    check_finite(d, "flow derivative");
    return d;
}

cplx flow_derivative(const BoundaryFunction& f, Flow field, Angles z, const FdSpec& fd) {
    if (f.is_zero()) return 0.0;
    if (fd.use_declared_symmetry) {
        if (f.g_invariant()) return 0.0;
        if (field == Flow::K && f.weight()) return cplx(0.0, *f.weight()) * f(z);
    }
    if (auto d = f.node().structural_derivative(field, z, fd)) return *d;
    return flow_derivative_fd(f, field, z, fd);
}

BoundaryFunction flow_derivative_fn(const BoundaryFunction& f, Flow field, const FdSpec& fd) {
    Codomain cd{f.codomain().complex, field == Flow::K ? f.weight() : std::nullopt};
    if (f.is_zero() || (fd.use_declared_symmetry && f.g_invariant())) return zero_function(f.arity(), cd);
    return BoundaryFunction(f.arity(), cd, std::make_shared<FlowNode>(f, field, fd), derived_traits(f));
}

BoundaryFunction cauchy_L(const BoundaryFunction& f, const FdSpec& fd) {
    Codomain cd{true, f.weight() == 0 ? std::optional<int>(1) : std::nullopt};
    if (f.is_zero() || (fd.use_declared_symmetry && f.g_invariant())) return zero_function(f.arity(), cd);
    return BoundaryFunction(f.arity(), cd, std::make_shared<CauchyNode>(f, fd, 1.0), derived_traits(f));
}

BoundaryFunction cauchy_Lbar(const BoundaryFunction& f, const FdSpec& fd) {
    Codomain cd{true, f.weight() == 0 ? std::optional<int>(-1) : std::nullopt};
    if (f.is_zero() || (fd.use_declared_symmetry && f.g_invariant())) return zero_function(f.arity(), cd);
    return BoundaryFunction(f.arity(), cd, std::make_shared<CauchyNode>(f, fd, -1.0), derived_traits(f));
}

BoundaryFunction frobenius_Q(const BoundaryFunction& u, const FdSpec& fd) {
    Codomain cd = Codomain::real(u.weight() == 1 ? std::optional<int>(0) : std::nullopt);
    if (u.is_zero()) return zero_function(u.arity(), cd);
    return BoundaryFunction(u.arity(), cd, std::make_shared<FrobeniusNode>(u, fd), derived_traits(u));
}

BoundaryFunction derivative_under_I(const BoundaryFunction& f, Flow field, const QuadratureSpec& quad,
                                    const FdSpec& fd) {
    quad.validate();
    if (f.arity() < 2) throw Error(ErrorCode::ArityError, "contraction needs arity >= 2");
    Codomain cd{f.codomain().complex, std::nullopt};
    return BoundaryFunction(f.arity() - 1, cd, std::make_shared<DerivativeUnderINode>(f, field, quad, fd),
                            derived_traits(f));
}

double flow_displacement(Flow field, double h, Angles z) {
    double buf[kMaxArity];
    double worst = 0.0;
    for (double t : {h, -h}) {
        move_along(field, t, z, buf);
        for (std::size_t i = 0; i < z.size(); ++i) worst = std::max(worst, circle_distance(buf[i], z[i]));
    }
    return worst;
}

}  // namespace staircase
