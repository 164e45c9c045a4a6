#pragma once

#include "staircase/boundary_function.hpp"
#include "staircase/quadrature.hpp"

namespace staircase {

// Homogeneous coboundary. With `simplify`, delta(delta f) collapses to the zero
// function and delta distributes over linear combinations.
BoundaryFunction coboundary(const BoundaryFunction& f, bool simplify = true);

// (I f)(z) = (1/2pi) int f(eta, z) d eta. The result is memoized unless memo == false.
BoundaryFunction contraction_I(const BoundaryFunction& f, const QuadratureSpec& quad, bool memo = true);

// Applies the one-parameter flow of `field` at time t to every angle of z.
void move_along(Flow field, double t, Angles z, double* out);

// L_X f at z: declared symmetries and structural rules first, then central differences.
cplx flow_derivative(const BoundaryFunction& f, Flow field, Angles z, const FdSpec& fd);

// Plain central differences of the evaluated function, ignoring any structure.
cplx flow_derivative_fd(const BoundaryFunction& f, Flow field, Angles z, const FdSpec& fd);

// z -> L_X f(z) as a function.
BoundaryFunction flow_derivative_fn(const BoundaryFunction& f, Flow field, const FdSpec& fd);

// L = L_A + i L_N and its conjugate L_A - i L_N.
BoundaryFunction cauchy_L(const BoundaryFunction& f, const FdSpec& fd);
BoundaryFunction cauchy_Lbar(const BoundaryFunction& f, const FdSpec& fd);

// Q u = Im u - L_A Im u + L_N Re u.
BoundaryFunction frobenius_Q(const BoundaryFunction& u, const FdSpec& fd);

// I(L_X f) + (1/2pi) int c_X(eta) f(eta, .) with c_A = cos, c_N = sin, c_K = 0.
BoundaryFunction derivative_under_I(const BoundaryFunction& f, Flow field, const QuadratureSpec& quad,
                                    const FdSpec& fd);

// Largest circle displacement of the angles of z under the flow for |t| <= h.
double flow_displacement(Flow field, double h, Angles z);

}  // namespace staircase
