#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "staircase/staircase.hpp"

namespace staircase {

// Identity checks shared by the CLI suites and the acceptance binary. Each returns one
// report per identity with the budget it was judged against.

// Smooth test functions.
BoundaryFunction smooth_test_function(int arity, int variant = 0);   // real, no symmetry
BoundaryFunction smooth_k_invariant(int arity, int variant = 0);     // real, weight 0
// I(or) / pi through the exact panel rule; the psi of the or-cup-or staircase.
BoundaryFunction or_derived_psi();

struct GroupCheckParams {
    int samples = 1000;
    std::uint64_t seed = 1;
};
std::vector<VerificationReport> check_group(const GroupCheckParams& p);

struct ContractionCheckParams {
    int samples = 100;
    std::uint64_t seed = 1;
    double margin = 0.1;
    int smooth_nodes = 256;
    int or_nodes = 1024;
};
std::vector<VerificationReport> check_contraction(const ContractionCheckParams& p);

// sup over angles of |I L I or(theta) - (i/pi) e^{i theta}|.
// rows: theta, Re, Im, error.
VerificationReport check_ili_or(int nodes, const FdSpec& fd, int samples, std::uint64_t seed,
                                double budget = 5e-3, std::vector<std::array<double, 4>>* rows = nullptr);

// Trapezoid error of I(or) against its closed form; budget 4/N.
VerificationReport check_contraction_quadrature(int nodes, int samples, std::uint64_t seed, double margin);

struct CommutatorCheckParams {
    int samples = 100;
    std::uint64_t seed = 1;
    double margin = 0.1;
    // outer step h, inner step h / 10
    FdSpec fd{1e-3, FdScheme::Central4, true};
    double budget = 1e-5;
};
std::vector<VerificationReport> check_commutators(const CommutatorCheckParams& p);

struct CupCheckParams {
    int samples = 100;
    std::uint64_t seed = 1;
    double margin = 0.1;
};
std::vector<VerificationReport> check_cup(const CupCheckParams& p);

struct SolverCheckParams {
    int samples = 50;
    std::uint64_t seed = 1;
    double margin = 0.1;
    FdSpec fd{1e-4, FdScheme::Central2, true};
    TailSpec tail;
    LineIntegralSpec line;
    BasepointScheme scheme;
    int tame_pairs = 100;  // 0 skips the tameness witnesses
};
std::vector<VerificationReport> check_solvers(const SolverCheckParams& p);

// |int_0^T Re(S psi)(a_t z) dt| - pi ||psi_K||_inf over random (T, z), T in [-20, 20].
VerificationReport check_tameness(const BoundaryFunction& psi, const TailSpec& tail, const LineIntegralSpec& line,
                                  int pairs, std::uint64_t seed, const char* name);

struct StaircaseCheckParams {
    int samples = 200;
    std::uint64_t seed = 1;
    double margin = 0.15;
    int intermediate_samples = 20;
    StaircaseConfig cfg;
};
std::vector<VerificationReport> check_staircase(const StaircaseCheckParams& p);

}  // namespace staircase
