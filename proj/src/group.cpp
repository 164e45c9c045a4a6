#include "staircase/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "staircase/angles.hpp"
#include "staircase/error.hpp"

namespace staircase {

namespace {

GroupElement canonical_sign(cplx a, cplx b) {
    if (a.real() < 0.0 || (a.real() == 0.0 && a.imag() < 0.0)) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

// General 2x2 complex matrix, used for Moebius maps that leave PU(1,1).
struct Mat2 {
    cplx m00, m01, m10, m11;
};

Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

Mat2 adjugate(const Mat2& x) { return {x.m11, -x.m01, -x.m10, x.m00}; }

// Sends w0 -> 0, w1 -> 1, w2 -> infinity.
Mat2 cross_ratio_map(cplx w0, cplx w1, cplx w2) {
    return {w1 - w2, -w0 * (w1 - w2), w1 - w0, -w2 * (w1 - w0)};
}

cplx on_circle(double theta) { return std::polar(1.0, theta); }

void check_triple(const Triple& t, const char* which) {
    if (min_separation(t) <= 1e-12)
        throw Error(ErrorCode::DegenerateTriple, std::string(which) + " triple has coincident points");
}

}  // namespace

const char* flow_name(Flow f) {
    switch (f) {
        case Flow::K: return "K";
        case Flow::A: return "A";
        case Flow::N: return "N";
    }
    return "?";
}

GroupElement make_element(cplx a, cplx b) {
    double det = std::norm(a) - std::norm(b);
    if (!(det > 1e-14)) throw Error(ErrorCode::DegenerateMatrix, "|a|^2 - |b|^2 must be positive");
    double s = 1.0 / std::sqrt(det);
    return canonical_sign(a * s, b * s);
}

GroupElement identity_element() { return {cplx(1.0, 0.0), cplx(0.0, 0.0)}; }

GroupElement one_param(Flow kind, double t) {
    switch (kind) {
        case Flow::K: return canonical_sign(std::polar(1.0, t / 2.0), 0.0);
        case Flow::A: return {cplx(std::cosh(t / 2.0), 0.0), cplx(-std::sinh(t / 2.0), 0.0)};
        case Flow::N: return {cplx(1.0, t / 2.0), cplx(0.0, -t / 2.0)};
    }
    return identity_element();
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    cplx a = g.a * h.a + g.b * std::conj(h.b);
    cplx b = g.a * h.b + g.b * std::conj(h.a);
    return make_element(a, b);
}

GroupElement inverse(const GroupElement& g) { return canonical_sign(std::conj(g.a), -g.b); }

double element_distance(const GroupElement& g, const GroupElement& h) {
    double plus = std::max(std::abs(g.a - h.a), std::abs(g.b - h.b));
    double minus = std::max(std::abs(g.a + h.a), std::abs(g.b + h.b));
    return std::min(plus, minus);
}

bool same_element(const GroupElement& g, const GroupElement& h, double tol) {
    return element_distance(g, h) <= tol;
}

double act_angle(const GroupElement& g, double theta) {
    // On the circle conj(b) w + conj(a) = w conj(a w + b), so g.w = (a w + b)^2 / |a w + b|^2 / w.
    cplx w = on_circle(theta);
    return reduce_angle(2.0 * std::arg(g.a * w + g.b) - theta);
}

double flow_angle(Flow kind, double t, double theta) {
    switch (kind) {
        case Flow::K: return reduce_angle(theta + t);
        case Flow::A: {
            // tan(theta'/2) = e^t tan(theta/2), scaled to avoid cosh - sinh cancellation.
            double h = 0.5 * reduce_angle(theta);
            double e = std::exp(0.5 * t);
            return reduce_angle(2.0 * std::atan2(e * std::sin(h), std::cos(h) / e));
        }
        case Flow::N: return act_angle(one_param(Flow::N, t), theta);
    }
    return theta;
}

IwasawaCoords iwasawa(const GroupElement& g) {
    // A and N fix the point 1, so g.1 = e^{i tK}.
    IwasawaCoords c;
    c.tK = reduce_angle(2.0 * std::arg(g.a + g.b));
    GroupElement h = compose(one_param(Flow::K, -c.tK), g);
    // h = a_s n_u has a + b = e^{-s/2} (real) and Im a = (u/2) e^{-s/2}.
    cplx sum = h.a + h.b;
    double sign = sum.real() < 0.0 ? -1.0 : 1.0;
    double e = sign * sum.real();
    c.tA = -2.0 * std::log(e);
    c.tN = 2.0 * sign * h.a.imag() / e;
    return c;
}

GroupElement recompose(const IwasawaCoords& c) {
    return compose(one_param(Flow::K, c.tK),
                   compose(one_param(Flow::A, c.tA), one_param(Flow::N, c.tN)));
}

CartanCoords cartan(const GroupElement& g) {
    // k_l a_T k_r = [[cosh(T/2) e^{i(l+r)/2}, -sinh(T/2) e^{i(l-r)/2}], ...]
    double alpha = std::arg(g.a);
    double rb = std::abs(g.b);
    double beta = rb > 0.0 ? std::arg(g.b) : 0.0;
    CartanCoords c;
    c.T = 2.0 * std::asinh(rb);
    c.tK_left = reduce_angle(alpha + beta + std::numbers::pi);
    c.tK_right = reduce_angle(alpha - beta - std::numbers::pi);
    return c;
}

GroupElement recompose(const CartanCoords& c) {
    return compose(one_param(Flow::K, c.tK_left),
                   compose(one_param(Flow::A, c.T), one_param(Flow::K, c.tK_right)));
}

GroupElement map_triple(const Triple& src, const Triple& dst) {
    check_triple(src, "source");
    check_triple(dst, "target");
    int os = orientation(src[0], src[1], src[2]);
    int od = orientation(dst[0], dst[1], dst[2]);
    if (os != od) throw Error(ErrorCode::OrientationMismatch, "triples have opposite orientation");
    Mat2 ms = cross_ratio_map(on_circle(src[0]), on_circle(src[1]), on_circle(src[2]));
    Mat2 md = cross_ratio_map(on_circle(dst[0]), on_circle(dst[1]), on_circle(dst[2]));
    Mat2 m = mul(adjugate(md), ms);
    cplx root = std::sqrt(m.m00 * m.m11 - m.m01 * m.m10);
    // After scaling to determinant one the matrix is +-[[a, b], [conj b, conj a]];
    // averaging the paired entries removes rounding asymmetry.
    cplx a = 0.5 * (m.m00 / root + std::conj(m.m11 / root));
    cplx b = 0.5 * (m.m01 / root + std::conj(m.m10 / root));
    return make_element(a, b);
}

}  // namespace staircase
