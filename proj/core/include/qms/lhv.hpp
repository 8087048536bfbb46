#pragma once

#include <vector>

#include "qms/density_matrix.hpp"
#include "qms/magic_square.hpp"

namespace qms {

// Finite mixture over a hidden value: normalized weights and, per hidden
// value, one outcome distribution for every (party, measurement) pair.
// Local-hidden-state models additionally carry one B-side state per hidden
// value.
struct LhvModel {
    TensorShape shape;
    std::vector<double> weights;
    // outcome_dists[lambda][party][meas][outcome]
    std::vector<std::vector<std::vector<std::vector<double>>>> outcome_dists;
    std::vector<DensityMatrix> hidden_states;  // empty, or one per hidden value

    void validate(double tol = kValidationTol) const;
};

// Tensor entry = sum_lambda kappa_lambda * prod over (party, measurement) of
// the conditional outcome probability.
MagicSquareTensor build_from_lhv(const LhvModel& model);

// Assemblage of a local-hidden-state model for party-0 measurement `meas`:
// member i = sum_lambda kappa_lambda p_i^(lambda) rho^(lambda).
Assemblage lhs_assemblage(const LhvModel& model, int meas);

}  // namespace qms
