#pragma once

#include <array>
#include <complex>

namespace staircase {

using cplx = std::complex<double>;

enum class Flow { K, A, N };

const char* flow_name(Flow f);

// Class of [[a, b], [conj(b), conj(a)]] in PU(1,1), stored with |a|^2 - |b|^2 = 1
// and Re(a) >= 0 (Im(a) >= 0 when Re(a) == 0).
struct GroupElement {
    cplx a{1.0, 0.0};
    cplx b{0.0, 0.0};
};

struct IwasawaCoords {
    double tK = 0.0;
    double tA = 0.0;
    double tN = 0.0;
};

struct CartanCoords {
    double tK_left = 0.0;
    double T = 0.0;
    double tK_right = 0.0;
};

GroupElement make_element(cplx a, cplx b);
GroupElement identity_element();
GroupElement one_param(Flow kind, double t);
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// Distance between projective classes: min over the sign of the representative.
double element_distance(const GroupElement& g, const GroupElement& h);
bool same_element(const GroupElement& g, const GroupElement& h, double tol = 1e-12);

// Angle of g.(e^{i theta}), reduced to [0, 2pi).
double act_angle(const GroupElement& g, double theta);

// act_angle(one_param(kind, t), theta), with a closed form for A that stays
// accurate for large |t|.
double flow_angle(Flow kind, double t, double theta);

IwasawaCoords iwasawa(const GroupElement& g);
GroupElement recompose(const IwasawaCoords& c);

CartanCoords cartan(const GroupElement& g);
GroupElement recompose(const CartanCoords& c);

using Triple = std::array<double, 3>;

// Unique g with g.src[j] = dst[j]. Both triples must be distinct and equally oriented.
GroupElement map_triple(const Triple& src, const Triple& dst);

}  // namespace staircase
