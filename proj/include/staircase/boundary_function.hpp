#pragma once

#include <complex>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staircase/angles.hpp"
#include "staircase/group.hpp"

namespace staircase {

enum class FdScheme { Central2, Central4 };

struct FdSpec {
    double h = 1e-4;
    FdScheme scheme = FdScheme::Central2;
    // Return exact zeros / i*mu*f for functions whose G-invariance or K-weight is declared,
    // instead of differencing them.
    bool use_declared_symmetry = true;

    void validate() const;
};

const char* scheme_name(FdScheme s);
FdScheme parse_scheme(const std::string& s);

struct Codomain {
    bool complex = false;
    // K-weight mu, when declared: f(z + t) = e^{i mu t} f(z).
    std::optional<int> weight;

    static Codomain real(std::optional<int> w = std::nullopt) { return {false, w}; }
    static Codomain weighted(int mu) { return {true, mu}; }
    static Codomain complex_valued() { return {true, std::nullopt}; }
};

class Node {
public:
    virtual ~Node() = default;
    virtual cplx eval(Angles z) const = 0;
    // Exact rule for the flow derivative, if the node has one.
    virtual std::optional<cplx> structural_derivative(Flow, Angles, const FdSpec&) const {
        return std::nullopt;
    }
};

struct Traits {
    // Declared invariance under the diagonal G-action on configuration points.
    bool g_invariant = false;
    // Structurally the zero function.
    bool zero = false;
    double singular_margin = 1e-3;
};

class BoundaryFunction {
public:
    BoundaryFunction(int arity, Codomain codomain, std::shared_ptr<const Node> node, Traits traits = {});

    int arity() const { return arity_; }
    const Codomain& codomain() const { return codomain_; }
    bool is_real() const { return !codomain_.complex; }
    std::optional<int> weight() const { return codomain_.weight; }
    bool g_invariant() const { return traits_.g_invariant; }
    bool is_zero() const { return traits_.zero; }
    double singular_margin() const { return traits_.singular_margin; }
    const Traits& traits() const { return traits_; }
    const Node& node() const { return *node_; }
    const std::shared_ptr<const Node>& node_ptr() const { return node_; }

    BoundaryFunction with_margin(double margin) const;

    cplx operator()(Angles z) const;
    cplx operator()(std::initializer_list<double> z) const;
    double real_at(Angles z) const { return (*this)(z).real(); }

private:
    int arity_;
    Codomain codomain_;
    std::shared_ptr<const Node> node_;
    Traits traits_;
};

using ComplexFn = std::function<cplx(Angles)>;
using RealFn = std::function<double(Angles)>;

BoundaryFunction from_callable(int arity, Codomain codomain, ComplexFn fn, Traits traits = {});
BoundaryFunction real_function(int arity, RealFn fn, Traits traits = {});
BoundaryFunction constant(int arity, cplx c);
BoundaryFunction zero_function(int arity, Codomain codomain = Codomain::real(0));

BoundaryFunction orientation_cocycle();

// (f cup g)(z_0..z_{p+q-2}) = f(z_0..z_{p-1}) g(z_{p-1}..z_{p+q-2}).
BoundaryFunction cup(const BoundaryFunction& f, const BoundaryFunction& g);

// f_K(z_1..z_m) = f(0, z_1..z_m).
BoundaryFunction k_reduce(const BoundaryFunction& f);

// f^K_mu(z_0..z_m) = e^{i mu z_0} f(z_1 - z_0, .., z_m - z_0).
BoundaryFunction k_extend(const BoundaryFunction& f, int mu);

using Term = std::pair<cplx, BoundaryFunction>;
BoundaryFunction linear_combination(const std::vector<Term>& terms);
BoundaryFunction operator+(const BoundaryFunction& f, const BoundaryFunction& g);
BoundaryFunction operator-(const BoundaryFunction& f, const BoundaryFunction& g);
BoundaryFunction operator*(cplx c, const BoundaryFunction& f);

// Caches values keyed by angles quantized to 1e-12.
BoundaryFunction memoize(const BoundaryFunction& f, std::size_t capacity = 1 << 16);

// The terms of f if it is a linear combination node, else {(1, f)}.
std::vector<Term> linear_terms(const BoundaryFunction& f);

// Sampled check of the declared weight: max |f(z + t) - e^{i mu t} f(z)|.
double equivariance_defect(const BoundaryFunction& f, int mu, Angles z, double t);

}  // namespace staircase
