#pragma once

#include <span>
#include <vector>

#include "qms/tolerances.hpp"

namespace qms {

// Equality-constrained system A x = b over non-negative variables.
struct LinearFeasibilityProblem {
    int variable_count = 0;
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;

    void validate() const;
};

enum class FeasibilityStatus { Feasible, Infeasible };

// A feasible answer carries a point satisfying every constraint; an
// infeasible one carries a Farkas vector y with y^T A <= 0 componentwise and
// y^T b > 0.  Both are re-validated before being returned.
struct FeasibilityOutcome {
    FeasibilityStatus status = FeasibilityStatus::Infeasible;
    std::vector<double> witness;
    std::vector<double> certificate;
};

FeasibilityOutcome solve_feasibility(const LinearFeasibilityProblem& problem, double tol = kSolverTol);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LinearProgramResult {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> x;
    std::vector<double> certificate;  // Farkas vector when infeasible
};

// Optimizes c.x over the same constraint set with a two-phase dense primal
// simplex (Bland's rule, iteration cap 10^6).
LinearProgramResult solve_linear_program(const LinearFeasibilityProblem& problem,
                                         std::span<const double> objective, bool maximize,
                                         double tol = kSolverTol);

bool verify_feasible_point(const LinearFeasibilityProblem& problem, std::span<const double> x,
                           double tol = kSolverTol);
bool verify_infeasibility_certificate(const LinearFeasibilityProblem& problem,
                                      std::span<const double> y, double tol = kSolverTol);

}  // namespace qms
