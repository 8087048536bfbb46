#pragma once

#include <optional>

#include "qms/magic_square.hpp"
#include "qms/simplex.hpp"

namespace qms {

// Constraint system asking for a tensor m >= 0 whose four double partial
// sums reproduce the given joints.  Exposed for audit output and tests.
LinearFeasibilityProblem bell_problem(const JointDistribution& xy, const JointDistribution& xyp,
                                      const JointDistribution& xpy, const JointDistribution& xpyp);

struct BellDecision {
    LinearFeasibilityProblem problem;
    FeasibilityOutcome outcome;
    std::optional<MagicSquareTensor> tensor;  // recovered witness when feasible
};

// Decides Bell locality of four mutually no-signalling joints; signalling
// inputs are rejected before solving.
BellDecision bell_locality_decide(const JointDistribution& xy, const JointDistribution& xyp,
                                  const JointDistribution& xpy, const JointDistribution& xpyp,
                                  double tol = kSolverTol);

struct GhzReport {
    LinearFeasibilityProblem four_problem;   // <XYY>=<YXY>=<YYX>=-1 and <XXX>=+1
    FeasibilityOutcome four_outcome;
    LinearFeasibilityProblem three_problem;  // the three -1 constraints only
    FeasibilityOutcome three_outcome;
    std::optional<MagicSquareTensor> three_tensor;
    double xxx_min = 0.0;  // range of <XXX> over the three-constraint system
    double xxx_max = 0.0;
};

GhzReport ghz_contradiction_check(double tol = kSolverTol);

// Signed cell coefficients of the CHSH combination (every cell carries +-2).
std::vector<double> chsh_coefficients(const TensorShape& shape);

double chsh_max_over_tensors(double tol = kSolverTol);
double chsh_min_over_tensors(double tol = kSolverTol);

// visibility * joint + (1 - visibility) * uniform.
JointDistribution mix_with_uniform(const JointDistribution& joint, double visibility);

}  // namespace qms
