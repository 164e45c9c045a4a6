#include "staircase/boundary_function.hpp"

#include <cmath>

#include "staircase/cochain_ops.hpp"
#include "staircase/error.hpp"
#include "staircase/memo_cache.hpp"

namespace staircase {

void FdSpec::validate() const {
    if (!(h > 0.0 && h < 0.1)) throw Error(ErrorCode::ConfigError, "fd.h must lie in (0, 0.1)");
}

const char* scheme_name(FdScheme s) { return s == FdScheme::Central2 ? "central2" : "central4"; }

FdScheme parse_scheme(const std::string& s) {
    if (s == "central2") return FdScheme::Central2;
    if (s == "central4") return FdScheme::Central4;
    throw Error(ErrorCode::ConfigError, "unknown finite-difference scheme '" + s + "'");
}

BoundaryFunction::BoundaryFunction(int arity, Codomain codomain, std::shared_ptr<const Node> node,
                                   Traits traits)
    : arity_(arity), codomain_(codomain), node_(std::move(node)), traits_(traits) {
    if (arity < 0 || arity > kMaxArity) throw Error(ErrorCode::ArityError, "arity out of range");
}

BoundaryFunction BoundaryFunction::with_margin(double margin) const {
    BoundaryFunction f = *this;
    f.traits_.singular_margin = margin;
    return f;
}

cplx BoundaryFunction::operator()(Angles z) const {
    if (static_cast<int>(z.size()) != arity_)
        throw Error(ErrorCode::ArityError, "expected " + std::to_string(arity_) + " angles, got " +
                                               std::to_string(z.size()));
    return node_->eval(z);
}

cplx BoundaryFunction::operator()(std::initializer_list<double> z) const {
    return (*this)(Angles(z.begin(), z.size()));
}

namespace {

class CallableNode final : public Node {
public:
    explicit CallableNode(ComplexFn fn) : fn_(std::move(fn)) {}
    cplx eval(Angles z) const override { return fn_(z); }

private:
    ComplexFn fn_;
};

class ConstantNode final : public Node {
public:
    explicit ConstantNode(cplx c) : c_(c) {}
    cplx eval(Angles) const override { return c_; }
    std::optional<cplx> structural_derivative(Flow, Angles, const FdSpec&) const override {
        return cplx(0.0);
    }

private:
    cplx c_;
};

class OrientationNode final : public Node {
public:
    cplx eval(Angles z) const override { return orientation(z[0], z[1], z[2]); }
};

class CupNode final : public Node {
public:
    CupNode(BoundaryFunction f, BoundaryFunction g) : f_(std::move(f)), g_(std::move(g)) {}
    cplx eval(Angles z) const override {
        const auto p = static_cast<std::size_t>(f_.arity());
        cplx a = f_(z.first(p));
        if (a == 0.0) return 0.0;
        return a * g_(z.subspan(p - 1));
    }

private:
    BoundaryFunction f_, g_;
};

class KReduceNode final : public Node {
public:
    explicit KReduceNode(BoundaryFunction f) : f_(std::move(f)) {}
    cplx eval(Angles z) const override {
        double buf[kMaxArity];
        buf[0] = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) buf[i + 1] = z[i];
        return f_(Angles(buf, z.size() + 1));
    }

private:
    BoundaryFunction f_;
};

class KExtendNode final : public Node {
public:
    KExtendNode(BoundaryFunction f, int mu) : f_(std::move(f)), mu_(mu) {}
    cplx eval(Angles z) const override {
        double buf[kMaxArity];
        for (std::size_t i = 1; i < z.size(); ++i) buf[i - 1] = reduce_angle(z[i] - z[0]);
        return std::polar(1.0, mu_ * z[0]) * f_(Angles(buf, z.size() - 1));
    }

private:
    BoundaryFunction f_;
    int mu_;
};

class LinearNode final : public Node {
public:
    explicit LinearNode(std::vector<Term> terms) : terms_(std::move(terms)) {}
    cplx eval(Angles z) const override {
        cplx s = 0.0;
        for (const auto& [c, f] : terms_) s += c * f(z);
        return s;
    }
    std::optional<cplx> structural_derivative(Flow x, Angles z, const FdSpec& fd) const override {
        cplx s = 0.0;
        for (const auto& [c, f] : terms_) s += c * flow_derivative(f, x, z, fd);
        return s;
    }
    const std::vector<Term>& terms() const { return terms_; }

private:
    std::vector<Term> terms_;
};

class MemoNode final : public Node {
public:
    MemoNode(BoundaryFunction f, std::size_t capacity) : f_(std::move(f)), cache_(capacity) {}
    cplx eval(Angles z) const override {
        if (auto v = cache_.find(z)) return *v;
        cplx v = f_(z);
        cache_.insert(z, v);
        return v;
    }
    std::optional<cplx> structural_derivative(Flow x, Angles z, const FdSpec& fd) const override {
        return f_.node().structural_derivative(x, z, fd);
    }

private:
    BoundaryFunction f_;
    mutable MemoCache cache_;
};

std::optional<int> sum_weight(const Codomain& a, const Codomain& b) {
    if (a.weight && b.weight) return *a.weight + *b.weight;
    return std::nullopt;
}

}  // namespace

BoundaryFunction from_callable(int arity, Codomain codomain, ComplexFn fn, Traits traits) {
    return BoundaryFunction(arity, codomain, std::make_shared<CallableNode>(std::move(fn)), traits);
}

BoundaryFunction real_function(int arity, RealFn fn, Traits traits) {
    return from_callable(
        arity, Codomain::real(), [fn = std::move(fn)](Angles z) { return cplx(fn(z), 0.0); }, traits);
}

BoundaryFunction constant(int arity, cplx c) {
    Codomain cd = c.imag() == 0.0 ? Codomain::real(0) : Codomain{true, 0};
    Traits t;
    t.g_invariant = true;
    t.zero = c == 0.0;
    return BoundaryFunction(arity, cd, std::make_shared<ConstantNode>(c), t);
}

BoundaryFunction zero_function(int arity, Codomain codomain) {
    Traits t;
    t.g_invariant = true;
    t.zero = true;
    return BoundaryFunction(arity, codomain, std::make_shared<ConstantNode>(0.0), t);
}

BoundaryFunction orientation_cocycle() {
    Traits t;
    t.g_invariant = true;
    return BoundaryFunction(3, Codomain::real(0), std::make_shared<OrientationNode>(), t);
}

BoundaryFunction cup(const BoundaryFunction& f, const BoundaryFunction& g) {
    if (f.arity() < 1 || g.arity() < 1) throw Error(ErrorCode::ArityError, "cup factors need arity >= 1");
    int arity = f.arity() + g.arity() - 1;
    Codomain cd{f.codomain().complex || g.codomain().complex, sum_weight(f.codomain(), g.codomain())};
    Traits t;
    t.g_invariant = f.g_invariant() && g.g_invariant();
    t.zero = f.is_zero() || g.is_zero();
    t.singular_margin = std::max(f.singular_margin(), g.singular_margin());
    if (t.zero) return zero_function(arity, cd);
    return BoundaryFunction(arity, cd, std::make_shared<CupNode>(f, g), t);
}

BoundaryFunction k_reduce(const BoundaryFunction& f) {
    if (f.arity() < 1) throw Error(ErrorCode::ArityError, "k_reduce needs arity >= 1");
    Codomain cd{f.codomain().complex, std::nullopt};
    Traits t;
    t.zero = f.is_zero();
    t.singular_margin = f.singular_margin();
    if (f.is_zero()) return zero_function(f.arity() - 1, cd);
    return BoundaryFunction(f.arity() - 1, cd, std::make_shared<KReduceNode>(f), t);
}

BoundaryFunction k_extend(const BoundaryFunction& f, int mu) {
    if (f.arity() + 1 > kMaxArity) throw Error(ErrorCode::ArityError, "k_extend arity too large");
    Codomain cd{f.codomain().complex || mu != 0, mu};
    Traits t;
    t.zero = f.is_zero();
    t.singular_margin = f.singular_margin();
    if (f.is_zero()) return zero_function(f.arity() + 1, cd);
    return BoundaryFunction(f.arity() + 1, cd, std::make_shared<KExtendNode>(f, mu), t);
}

std::vector<Term> linear_terms(const BoundaryFunction& f) {
    if (auto* lin = dynamic_cast<const LinearNode*>(&f.node())) return lin->terms();
    return {{cplx(1.0), f}};
}

BoundaryFunction linear_combination(const std::vector<Term>& terms) {
    if (terms.empty()) throw Error(ErrorCode::ArityError, "empty linear combination");
    const int arity = terms.front().second.arity();
    bool complex = false, invariant = true;
    std::optional<int> w = terms.front().second.weight();
    double margin = 0.0;
    std::vector<Term> kept;
    for (const auto& [c, f] : terms) {
        if (f.arity() != arity) throw Error(ErrorCode::ArityMismatch, "linear combination of mixed arities");
        complex = complex || f.codomain().complex || c.imag() != 0.0;
        invariant = invariant && f.g_invariant();
        if (f.weight() != w) w.reset();
        margin = std::max(margin, f.singular_margin());
        if (c != 0.0 && !f.is_zero()) kept.emplace_back(c, f);
    }
    Codomain cd{complex, w};
    if (kept.empty()) return zero_function(arity, cd);
    if (kept.size() == 1 && kept.front().first == 1.0) return kept.front().second;
    Traits t;
    t.g_invariant = invariant;
    t.singular_margin = margin;
    return BoundaryFunction(arity, cd, std::make_shared<LinearNode>(std::move(kept)), t);
}

BoundaryFunction operator+(const BoundaryFunction& f, const BoundaryFunction& g) {
    return linear_combination({{1.0, f}, {1.0, g}});
}

BoundaryFunction operator-(const BoundaryFunction& f, const BoundaryFunction& g) {
    return linear_combination({{1.0, f}, {-1.0, g}});
}

BoundaryFunction operator*(cplx c, const BoundaryFunction& f) { return linear_combination({{c, f}}); }

BoundaryFunction memoize(const BoundaryFunction& f, std::size_t capacity) {
    if (f.is_zero()) return f;
    return BoundaryFunction(f.arity(), f.codomain(), std::make_shared<MemoNode>(f, capacity), f.traits());
}

double equivariance_defect(const BoundaryFunction& f, int mu, Angles z, double t) {
    double buf[kMaxArity];
    for (std::size_t i = 0; i < z.size(); ++i) buf[i] = reduce_angle(z[i] + t);
    cplx moved = f(Angles(buf, z.size()));
    return std::abs(moved - std::polar(1.0, mu * t) * f(z));
}

}  // namespace staircase
