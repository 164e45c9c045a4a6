#pragma once

#include <cstdint>
#include <vector>

#include "staircase/boundary_function.hpp"
#include "staircase/cochain_ops.hpp"
#include "staircase/parallel.hpp"
#include "staircase/pde_solvers.hpp"
#include "staircase/quadrature.hpp"
#include "staircase/report.hpp"
#include "staircase/tabulation.hpp"

namespace staircase {

struct StaircaseConfig {
    QuadratureSpec quad{32, CircleRule::Panel, 4};
    FdSpec fd;
    TailSpec tail;
    LineIntegralSpec line;
    BasepointScheme scheme;
    // Replace the arity-2 functions psi and S psi by Chebyshev tables of their
    // K-reductions (only used when psi has arity 2).
    bool tabulate = true;
    TabulationSpec table;

    void validate() const;
    ConfigEcho echo() const;
};

// Every intermediate function of p = I c - delta R (Id - delta S I Q) I L I c.
struct StaircaseStages {
    BoundaryFunction ic, lic, ilic, q_ilic, psi, s_psi, u, ru, p;
    TabulationStats psi_table, s_table;
    bool tabulated = false;
};

StaircaseStages staircase_stages(const BoundaryFunction& c, const StaircaseConfig& cfg);

// Checks arity and the cocycle / invariance preconditions at a few seeded points, then
// returns the p stage.
BoundaryFunction primitive_P(const BoundaryFunction& c, const StaircaseConfig& cfg);

struct VerifyOptions {
    FdSpec fd;
    // Evaluate delta p face by face; otherwise delta(delta .) is simplified away.
    bool expand_coboundary = true;
    bool check_invariance = true;
    // Record p at each sample (needs R; off for the degree-6 spot check).
    bool record_values = true;
    double budget = 0.05;
    double invariance_budget = 0.05;
    Execution execution = Execution::Parallel;
};

struct PrimitiveSample {
    std::vector<double> angles;
    double p_value = 0.0;
    double residual = 0.0;
    double invariance = 0.0;
};

VerificationReport verify_primitive(const BoundaryFunction& c, const BoundaryFunction& p, int samples,
                                    std::uint64_t seed, double margin, const VerifyOptions& opts = {},
                                    std::vector<PrimitiveSample>* rows = nullptr);

// |f| at the first `samples` seeded configuration points.
std::vector<double> sample_abs(const BoundaryFunction& f, int samples, std::uint64_t seed, double margin,
                               Execution execution = Execution::Parallel);

double estimate_sup(const BoundaryFunction& f, int samples, std::uint64_t seed, double margin,
                    Execution execution = Execution::Parallel);

}  // namespace staircase
